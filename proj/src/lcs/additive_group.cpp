#include "lcsext/lcs/additive_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcsext::lcs {

AdditiveGroup::AdditiveGroup() : sum_{0}, neg_{0}, descriptor_(abelian::FiniteAbelianGroup{}) {}

AdditiveGroup AdditiveGroup::from_group(const abelian::FiniteAbelianGroup& g) {
  const std::uint64_t n = g.size();
  if (n > 4096) throw std::invalid_argument("group of order " + std::to_string(n) + " is too large for tables");
  AdditiveGroup out;
  out.n_ = n;
  out.sum_.assign(n * n, 0);
  out.neg_.assign(n, 0);
  std::vector<abelian::GroupElement> elems;
  for (std::uint64_t i = 0; i < n; ++i) elems.push_back(g.element_at(i));
  for (std::uint64_t a = 0; a < n; ++a) {
    out.neg_[a] = static_cast<Index>(g.index_of(g.neg(elems[a])));
    for (std::uint64_t b = 0; b < n; ++b) out.sum_[a * n + b] = static_cast<Index>(g.index_of(g.add(elems[a], elems[b])));
  }
  out.descriptor_ = g;
  return out;
}

AdditiveGroup AdditiveGroup::from_table(std::size_t n, std::vector<Index> sum_table) {
  if (n == 0) throw std::invalid_argument("group must have at least one element");
  if (sum_table.size() != n * n) throw std::invalid_argument("sum table must be n x n");
  for (Index v : sum_table)
    if (v >= n) throw std::invalid_argument("sum table entry out of range");
  auto s = [&](std::size_t a, std::size_t b) { return sum_table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (s(0, a) != a || s(a, 0) != a) throw std::invalid_argument("element 0 is not neutral for the sum table");
    for (std::size_t b = 0; b < n; ++b) {
      if (s(a, b) != s(b, a)) throw std::invalid_argument("sum table is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (s(s(a, b), c) != s(a, s(b, c))) throw std::invalid_argument("sum table is not associative");
    }
  }
  AdditiveGroup out;
  out.n_ = n;
  out.neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto row = sum_table.begin() + static_cast<std::ptrdiff_t>(a * n);
    auto it = std::find(row, row + static_cast<std::ptrdiff_t>(n), Index{0});
    if (it == row + static_cast<std::ptrdiff_t>(n)) throw std::invalid_argument("element without additive inverse");
    out.neg_[a] = static_cast<Index>(it - row);
  }
  out.sum_ = std::move(sum_table);
  out.descriptor_.reset();
  return out;
}

Index AdditiveGroup::multiple(std::int64_t k, Index a) const {
  bool negative = k < 0;
  std::uint64_t m = static_cast<std::uint64_t>(negative ? -k : k) % n_;
  Index acc = 0;
  for (std::uint64_t i = 0; i < m; ++i) acc = add(acc, a);
  return negative ? neg(acc) : acc;
}

std::vector<std::vector<Index>> automorphisms(const abelian::FiniteAbelianGroup& g) {
  const AdditiveGroup A = AdditiveGroup::from_group(g);
  const std::size_t n = A.size();
  const std::size_t k = g.rank();
  std::vector<Index> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<Index>(g.index_of(g.generator(i))));

  std::vector<std::vector<Index>> out;
  std::vector<Index> images(k, 0);
  // Image of generator i must be killed by its order.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      std::vector<Index> perm(n, 0);
      std::vector<bool> hit(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        auto coords = g.element_at(x).coordinates;
        Index img = 0;
        for (std::size_t j = 0; j < k; ++j) img = A.add(img, A.multiple(coords[j], images[j]));
        if (hit[img]) return;
        hit[img] = true;
        perm[x] = img;
      }
      out.push_back(std::move(perm));
      return;
    }
    for (Index y = 0; y < n; ++y) {
      if (A.multiple(g.cyclic_order(i), y) != 0) continue;
      images[i] = y;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lcsext::lcs
