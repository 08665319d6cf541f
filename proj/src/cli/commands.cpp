#include "lcsext/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcsext/cohomology/cohomology.hpp"
#include "lcsext/cohomology/verify.hpp"
#include "lcsext/errors.hpp"
#include "lcsext/extension/extract.hpp"
#include "lcsext/extension/product.hpp"

namespace lcsext::cli {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

CommandResult error(int code, const std::string& kind, const std::string& message) {
  return {code, Json{{"error", kind}, {"message", message}}};
}

abelian::FiniteAbelianGroup group_of(const Json& j) {
  if (j.is_object() && j.contains("cyclic_orders")) return group_from_json(j);
  LinearCycleSet L = lcs_from_json(j);
  if (!L.is_trivial()) throw HypothesisError("I must be a trivial linear cycle set");
  if (!L.group().descriptor()) throw InputError("I needs a group descriptor");
  return *L.group().descriptor();
}

Json complex_report_json(const cohomology::ComplexReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"identity", x.identity},
                     {"bidegree", {x.r, x.s}},
                     {"generator", x.generator},
                     {"tuple", x.tuple}});
  return Json{{"pass", r.pass()}, {"identities_checked", r.identities_checked}, {"violations", v}};
}

extension::CheckReport laws_of(const LinearCycleSet& H, const abelian::FiniteAbelianGroup& I,
                               const extension::ActionPair& act) {
  const LinearCycleSet Il = lcs::trivial_lcs(I);
  const std::size_t nh = H.size();
  extension::ExtensionData d{Il, H, extension::constant_table(nh, nh), extension::constant_table(nh, nh),
                             act.diamond, act.yleft};
  return extension::action_laws(d);
}

void require_laws(const extension::CheckReport& laws) {
  if (const auto* bad = laws.first_failure())
    throw ActionLawError("action law " + bad->key + " fails: " + bad->formula);
}

struct ComplexInput {
  LinearCycleSet H;
  abelian::FiniteAbelianGroup I;
  extension::ActionPair actions;
};

ComplexInput complex_input(const Json& input) {
  ComplexInput c{lcs_or_group_from_json(field(input, "H")), group_of(field(input, "I")), {}};
  c.actions = actions_from_json(input, c.I.size(), c.H.size());
  return c;
}

}  // namespace

CommandResult cmd_validate(const Json& input) {
  LcsDescriptor d = lcs_descriptor_from_json(input);
  lcs::LcsValidation v = lcs::lcs_from_table(d.group, d.flat());
  if (v.valid()) return {kSuccess, Json{{"valid", true}, {"order", d.group.size()}}};
  Json violations = Json::array();
  for (const auto& x : v.violations) violations.push_back(Json{{"axiom", lcs::axiom_name(x.axiom)}, {"witness", x.witness}});
  return {kSemanticFailure, Json{{"valid", false},
                                 {"first", Json{{"axiom", lcs::axiom_name(v.first().axiom)}, {"witness", v.first().witness}}},
                                 {"violations", violations}}};
}

CommandResult cmd_check(const RunConfig& config, const Json& input) {
  extension::ExtensionData d = data_from_json(input);
  std::vector<std::string> construction = extension::data_violations(d);
  extension::CheckReport r;
  if (config.mode == "general") {
    r = extension::check_general(d);
  } else if (config.mode == "central") {
    r = extension::check_central_cocycle(d);
  } else if (config.mode == "socle") {
    if (!d.I.is_trivial()) throw HypothesisError("socle mode needs a trivial I");
    r = extension::check_trivial_ideal(d);
  } else {
    throw InputError("unknown mode " + config.mode);
  }
  const bool pass = construction.empty() && r.pass();
  return {pass ? kSuccess : kSemanticFailure,
          Json{{"mode", config.mode}, {"pass", pass}, {"construction", construction}, {"checks", report_to_json(r)}}};
}

CommandResult cmd_classify(const RunConfig& config, const Json& input) {
  LinearCycleSet I = lcs_or_group_from_json(field(input, "I"));
  if (!I.is_trivial()) throw HypothesisError("classification needs a trivial I");
  LinearCycleSet H = lcs_or_group_from_json(field(input, "H"));
  extension::ActionPair act = actions_from_json(input, I.size(), H.size());
  extension::ClassifyLimits limits{config.max_order, config.max_search};
  cohomology::ExtVsH2Report r = cohomology::ext_vs_h2_report(I, H, act, limits);
  Json reps = Json::array();
  for (const auto& rep : r.classification.representatives)
    reps.push_back(Json{{"beta", rep.data.beta}, {"f", rep.data.f}});
  Json h2 = Json::array();
  for (const auto& d : r.h2_invariants) h2.push_back(bigint_to_json(d));
  const bool agree = r.counts_agree && r.coboundary_matches_equivalence;
  return {agree ? kSuccess : kSemanticFailure, Json{{"class_count", r.class_count},
                                                    {"h2_order", bigint_to_json(r.h2_order)},
                                                    {"h2_invariant_factors", h2},
                                                    {"counts_agree", r.counts_agree},
                                                    {"coboundary_matches_equivalence", r.coboundary_matches_equivalence},
                                                    {"agree", agree},
                                                    {"cocycle_count", r.classification.cocycles.size()},
                                                    {"representatives", reps}}};
}

CommandResult cmd_cohomology(const RunConfig& config, const Json& input) {
  ComplexInput c = complex_input(input);
  std::size_t degree = 0;
  if (config.degree) {
    degree = *config.degree;
  } else {
    const Json& d = field(input, "degree");
    if (!d.is_number_unsigned()) throw InputError("degree must be a positive integer");
    degree = d.get<std::size_t>();
  }
  if (degree == 0) throw InputError("degree must be a positive integer");
  require_laws(laws_of(c.H, c.I, c.actions));
  const cohomology::ComplexSetup setup =
      cohomology::make_setup(c.H, c.I, c.actions, cohomology::SignConvention::corollary, config.max_tuples);
  cohomology::ComplexReport pre = cohomology::verify_total_complex(setup, degree);
  if (!pre.pass())
    throw ActionLawError("(d + D)^2 != 0: " + pre.violations.front().identity + " on C^{" +
                         std::to_string(pre.violations.front().r) + "," + std::to_string(pre.violations.front().s) + "}");
  auto inv = cohomology::cohomology(setup, degree);
  Json factors = Json::array();
  for (const auto& d : inv) factors.push_back(bigint_to_json(d));
  return {kSuccess,
          Json{{"degree", degree}, {"invariant_factors", factors}, {"order", bigint_to_json(cohomology::group_order(inv))}}};
}

CommandResult cmd_complex_check(const RunConfig& config, const Json& input) {
  ComplexInput c = complex_input(input);
  const cohomology::ComplexSetup setup =
      cohomology::make_setup(c.H, c.I, c.actions, cohomology::SignConvention::corollary, config.max_tuples);
  extension::CheckReport laws = laws_of(c.H, c.I, c.actions);
  cohomology::ComplexReport dbl = cohomology::verify_double_complex(setup, config.maxdeg);
  cohomology::ComplexReport tot = cohomology::verify_total_complex(setup, config.maxdeg);
  const bool pass = laws.pass() && dbl.pass() && tot.pass();
  return {pass ? kSuccess : kSemanticFailure, Json{{"maxdeg", config.maxdeg},
                                                   {"pass", pass},
                                                   {"action_laws", report_to_json(laws)},
                                                   {"double_complex", complex_report_json(dbl)},
                                                   {"total_complex", complex_report_json(tot)}}};
}

CommandResult cmd_extract(const Json& input) {
  extension::AbstractExtension E;
  LinearCycleSet B = lcs_from_json(field(input, "B"));
  if (input.contains("ideal")) {
    const Json& ideal = input.at("ideal");
    if (!ideal.is_array()) throw InputError("ideal must be an array of element indices");
    std::vector<Index> elements;
    for (const Json& v : ideal) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= B.size()) throw InputError("ideal entries must be elements of B");
      elements.push_back(v.get<Index>());
    }
    E = extension::ideal_extension(B, lcs::make_substructure(elements));
  } else {
    E.B = B;
    E.I = lcs_or_group_from_json(field(input, "I"));
    E.H = lcs_or_group_from_json(field(input, "H"));
    E.iota = table_from_json(Json::array({field(input, "iota")}), 1, E.I.size(), B.size(), "iota")[0];
    E.pi = table_from_json(Json::array({field(input, "pi")}), 1, B.size(), E.H.size(), "pi")[0];
  }
  std::vector<Index> section;
  if (input.contains("section")) {
    section = table_from_json(Json::array({input.at("section")}), 1, E.H.size(), E.B.size(), "section")[0];
  } else {
    section.assign(E.H.size(), 0);
    for (Index b = E.B.size(); b-- > 1;)
      if (E.pi[b] != 0) section[E.pi[b]] = b;
  }
  extension::ExtensionData d = extension::extract_data(E, section);
  return {kSuccess, Json{{"section", section}, {"iota", E.iota}, {"pi", E.pi}, {"data", data_to_json(d)}}};
}

CommandResult cmd_equivalent(const RunConfig& config, const Json& input) {
  extension::ExtensionData d1 = data_from_json(field(input, "E1"));
  extension::ExtensionData d2 = data_from_json(field(input, "E2"));
  extension::ProductExtension E1 = extension::build_product_extension(d1);
  extension::ProductExtension E2 = extension::build_product_extension(d2);
  for (const auto* E : {&E1, &E2}) {
    auto v = extension::check_extension_tables(*E);
    if (!v.valid())
      throw std::invalid_argument(std::string(E == &E1 ? "E1" : "E2") + " does not define an extension" +
                                  (v.violation ? " (" + lcs::axiom_name(v.violation->axiom) + " fails)" : ""));
  }
  auto w = extension::extensions_equivalent(E1, E2, config.max_search);
  return {w ? kSuccess : kSemanticFailure,
          Json{{"equivalent", w.has_value()}, {"phi", w ? Json(w->phi) : Json(nullptr)}}};
}

CommandResult run_command(const RunConfig& config, const Json& input) {
  try {
    const std::string& c = config.command;
    if (c == "validate") return cmd_validate(input);
    if (c == "check") return cmd_check(config, input);
    if (c == "classify") return cmd_classify(config, input);
    if (c == "cohomology") return cmd_cohomology(config, input);
    if (c == "complex-check") return cmd_complex_check(config, input);
    if (c == "extract") return cmd_extract(input);
    if (c == "equivalent") return cmd_equivalent(config, input);
    return error(kParseError, "usage", "unknown command " + c);
  } catch (const InputError& e) {
    return error(kParseError, "input", e.what());
  } catch (const Json::exception& e) {
    return error(kParseError, "input", e.what());
  } catch (const GuardError& e) {
    return error(kGuardExceeded, "guard",
                 std::string(e.what()) + "; raise --max-order, --max-search or --max-tuples to proceed");
  } catch (const ActionLawError& e) {
    return error(kInvalidActions, "action_laws", e.what());
  } catch (const HypothesisError& e) {
    return error(kInvalidActions, "hypothesis", e.what());
  } catch (const std::invalid_argument& e) {
    return error(kSemanticFailure, "precondition", e.what());
  }
}

int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extensions and cohomology of linear cycle sets", "lcsext"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  std::string output = "json";
  app.add_option("--input", config.input, "Input JSON file (default: standard input)");
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-order", config.max_order, "Largest |I|, |H| for classification")->check(CLI::PositiveNumber);
  app.add_option("--max-search", config.max_search, "Largest equivalence search space |I|^(|H|-1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-tuples", config.max_tuples, "Largest number of basis tuples per cochain group")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Random seed");

  app.add_subcommand("validate", "Check the linear cycle set axioms of a table");
  auto* check = app.add_subcommand("check", "Evaluate the extension identities of cocycle data");
  check->add_option("--mode", config.mode, "general, central or socle")
      ->check(CLI::IsMember({"general", "central", "socle"}));
  app.add_subcommand("classify", "Extension classes for fixed actions against |H^2|");
  auto* coh = app.add_subcommand("cohomology", "Invariant factors of H^n");
  std::size_t degree = 0;
  auto* degree_opt = coh->add_option("--degree", degree, "Cohomological degree")->check(CLI::PositiveNumber);
  auto* cc = app.add_subcommand("complex-check", "Verify the (double) complex identities");
  cc->add_option("--maxdeg", config.maxdeg, "Largest source degree")->check(CLI::PositiveNumber);
  app.add_subcommand("extract", "Cocycle data of an extension through a section");
  app.add_subcommand("equivalent", "Search for an equivalence of two extensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.output = output == "text" ? OutputFormat::text : OutputFormat::json;
  if (degree_opt->count() > 0) config.degree = degree;

  CommandResult result;
  try {
    std::string text;
    if (config.input.empty() || config.input == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(config.input);
      if (!file) throw InputError("cannot open " + config.input);
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    result = run_command(config, Json::parse(text));
  } catch (const Json::parse_error& e) {
    result = error(kParseError, "parse", e.what());
  } catch (const InputError& e) {
    result = error(kParseError, "input", e.what());
  }
  if (result.body.contains("error")) err << "lcsext: " << result.body["message"].get<std::string>() << "\n";
  if (config.output == OutputFormat::text)
    out << render_text(result.body);
  else
    out << result.body.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace lcsext::cli
