#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcsext/cli/json_io.hpp"

namespace lcsext::cli {

enum ExitCode : int { kSuccess = 0, kSemanticFailure = 1, kParseError = 2, kGuardExceeded = 3, kInvalidActions = 4 };

enum class OutputFormat { json, text };

struct RunConfig {
  std::string command;
  /// Empty or "-" reads standard input.
  std::string input;
  OutputFormat output = OutputFormat::json;
  std::size_t max_order = 4;
  std::uint64_t max_search = 1'000'000;
  std::uint64_t max_tuples = cohomology::kDefaultMaxTuples;
  std::uint64_t seed = 0;
  /// check
  std::string mode = "general";
  /// cohomology; falls back to the "degree" field of the input
  std::optional<std::size_t> degree;
  /// complex-check
  std::size_t maxdeg = 3;
};

struct CommandResult {
  int exit_code = kSuccess;
  Json body;
};

/// Runs one subcommand on a parsed input document.  Library errors are
/// mapped to exit codes and reported in the body as {"error": kind, "message": ...}.
CommandResult run_command(const RunConfig& config, const Json& input);

/// validate: exit 1 with the first violated axiom when the table is not a linear cycle set.
CommandResult cmd_validate(const Json& input);
/// check --mode general|central|socle
CommandResult cmd_check(const RunConfig& config, const Json& input);
CommandResult cmd_classify(const RunConfig& config, const Json& input);
CommandResult cmd_cohomology(const RunConfig& config, const Json& input);
CommandResult cmd_complex_check(const RunConfig& config, const Json& input);
CommandResult cmd_extract(const Json& input);
CommandResult cmd_equivalent(const RunConfig& config, const Json& input);

/// Full command line: parses arguments and input, writes one document to out
/// and diagnostics to err, returns the exit code.
int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lcsext::cli
