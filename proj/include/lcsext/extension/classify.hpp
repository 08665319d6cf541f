#pragma once

#include <cstdint>
#include <vector>

#include "lcsext/extension/equivalence.hpp"
#include "lcsext/lcs/additive_group.hpp"

namespace lcsext::extension {

/// Additive endomorphisms of a table group, sorted lexicographically.
std::vector<std::vector<Index>> additive_endomorphisms(const lcs::AdditiveGroup& A);

struct ActionPair {
  Table diamond;
  Table yleft;
  friend auto operator<=>(const ActionPair&, const ActionPair&) = default;
};

/// Every (<>, <|) for a trivial I satisfying the triangle, diamond and power
/// laws, in lexicographic order.  Throws std::invalid_argument if I is not trivial.
std::vector<ActionPair> admissible_actions(const LinearCycleSet& I, const LinearCycleSet& H);

struct Cocycle {
  Table beta;
  Table f;
  friend auto operator<=>(const Cocycle&, const Cocycle&) = default;
};

/// Data with the given tables.
ExtensionData with_cocycle(const LinearCycleSet& I, const LinearCycleSet& H, const ActionPair& actions,
                           const Cocycle& c);

/// Every (beta, f) making I x H an extension for the fixed actions of a
/// trivial I, in lexicographic order of (beta, f).  Throws ActionLawError if
/// the actions violate their laws.
std::vector<Cocycle> enumerate_cocycles(const LinearCycleSet& I, const LinearCycleSet& H, const ActionPair& actions);

struct ClassifyLimits {
  std::size_t max_order = 4;
  std::uint64_t max_search = kDefaultMaxSearch;
};

struct Classification {
  /// Lexicographically least cocycle of each class, in lexicographic order.
  std::vector<ProductExtension> representatives;
  /// All cocycles and the index of the class of each.
  std::vector<Cocycle> cocycles;
  std::vector<std::size_t> class_of;

  std::size_t class_count() const { return representatives.size(); }
};

/// Extensions of H by a trivial I with fixed actions, up to equivalence.
/// Throws GuardError when |I| or |H| exceeds limits.max_order.
Classification classify_extensions(const LinearCycleSet& I, const LinearCycleSet& H, const ActionPair& actions,
                                   const ClassifyLimits& limits = {});

}  // namespace lcsext::extension
