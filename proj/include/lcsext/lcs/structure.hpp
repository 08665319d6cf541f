#pragma once

#include <vector>

#include "lcsext/lcs/linear_cycle_set.hpp"

namespace lcsext::lcs {

/// A subset of the elements, sorted; position k is included as elements[k].
struct Substructure {
  std::vector<Index> elements;

  bool contains(Index a) const;
  std::size_t size() const { return elements.size(); }
  friend bool operator==(const Substructure&, const Substructure&) = default;
};

Substructure make_substructure(std::vector<Index> elements);

bool is_subgroup(const AdditiveGroup& group, const Substructure& s);

/// {y : y.a = a for all a}
Substructure socle(const LinearCycleSet& L);
/// Socle elements with a.y = y for all a.
Substructure center(const LinearCycleSet& L);
/// a.y in S and y.a - a in S for all a, y in S.  Throws std::invalid_argument
/// if S is not a subgroup.
bool is_ideal(const LinearCycleSet& L, const Substructure& S);

/// Every linear cycle structure on the group, in lexicographic table order.
/// Throws GuardError when the group order exceeds max_order.
std::vector<LinearCycleSet> enumerate_lcs(const abelian::FiniteAbelianGroup& group, std::size_t max_order = 8);

}  // namespace lcsext::lcs
