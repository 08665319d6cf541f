#include "lcsext/lcs/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcsext/errors.hpp"

namespace lcsext::lcs {

bool Substructure::contains(Index a) const { return std::binary_search(elements.begin(), elements.end(), a); }

Substructure make_substructure(std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return {std::move(elements)};
}

bool is_subgroup(const AdditiveGroup& group, const Substructure& s) {
  if (!s.contains(0)) return false;
  for (Index x : s.elements) {
    if (x >= group.size()) return false;
    for (Index y : s.elements)
      if (!s.contains(group.sub(x, y))) return false;
  }
  return true;
}

Substructure socle(const LinearCycleSet& L) {
  std::vector<Index> out;
  for (Index y = 0; y < L.size(); ++y) {
    bool in = true;
    for (Index a = 0; a < L.size() && in; ++a) in = L.dot(y, a) == a;
    if (in) out.push_back(y);
  }
  return {out};
}

Substructure center(const LinearCycleSet& L) {
  std::vector<Index> out;
  for (Index y : socle(L).elements) {
    bool in = true;
    for (Index a = 0; a < L.size() && in; ++a) in = L.dot(a, y) == y;
    if (in) out.push_back(y);
  }
  return {out};
}

bool is_ideal(const LinearCycleSet& L, const Substructure& S) {
  if (!std::is_sorted(S.elements.begin(), S.elements.end()) || !is_subgroup(L.group(), S))
    throw std::invalid_argument("is_ideal: the given set is not a subgroup");
  for (Index y : S.elements)
    for (Index a = 0; a < L.size(); ++a)
      if (!S.contains(L.dot(a, y)) || !S.contains(L.yleft(y, a))) return false;
  return true;
}

std::vector<LinearCycleSet> enumerate_lcs(const abelian::FiniteAbelianGroup& group, std::size_t max_order) {
  const AdditiveGroup A = AdditiveGroup::from_group(group);
  const std::size_t n = A.size();
  if (n > max_order)
    throw GuardError("enumerate_lcs: group order " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(max_order));

  // Each row a -> a.b is an additive automorphism; rows are tied by
  // row(a+b) = row(a.b) o row(a).
  const std::vector<std::vector<Index>> aut = automorphisms(group);
  std::vector<const std::vector<Index>*> rows(n, nullptr);
  std::size_t identity = 0;
  while (identity < aut.size()) {
    bool id = true;
    for (Index x = 0; x < n && id; ++x) id = aut[identity][x] == x;
    if (id) break;
    ++identity;
  }
  rows[0] = &aut[identity];

  auto consistent = [&](Index a, Index b) {
    const auto* ra = rows[a];
    const auto* rs = rows[A.add(a, b)];
    const auto* rt = rows[(*ra)[b]];
    if (!rs || !rt) return true;
    for (Index c = 0; c < n; ++c)
      if ((*rs)[c] != (*rt)[(*ra)[c]]) return false;
    return true;
  };
  std::vector<LinearCycleSet> out;
  auto recurse = [&](auto&& self, Index a) -> void {
    if (a == n) {
      std::vector<Index> table;
      for (Index r = 0; r < n; ++r) table.insert(table.end(), rows[r]->begin(), rows[r]->end());
      LcsValidation v = lcs_from_table(A, std::move(table));
      if (v.valid()) out.push_back(std::move(*v.lcs));
      return;
    }
    for (const auto& candidate : aut) {
      rows[a] = &candidate;
      // Constraints whose three rows are assigned and involve row a.
      bool ok = true;
      for (Index x = 0; x <= a && ok; ++x)
        for (Index y = 0; y < n && ok; ++y) {
          Index s = A.add(x, y), t = (*rows[x])[y];
          if (s > a || t > a) continue;
          if (x != a && s != a && t != a) continue;
          ok = consistent(x, y);
        }
      if (ok) self(self, a + 1);
    }
    rows[a] = nullptr;
  };
  if (n == 1) {
    out.push_back(trivial_lcs(A));
    return out;
  }
  recurse(recurse, 1);
  return out;
}

}  // namespace lcsext::lcs
