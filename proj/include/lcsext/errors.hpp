#pragma once

#include <stdexcept>
#include <string>

namespace lcsext {

/// A configurable size guard would be exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supplied action tables violate the laws an operation requires.
class ActionLawError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The centrality hypothesis of the central-cocycle ledger does not hold.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lcsext
