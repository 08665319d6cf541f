#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcsext/abelian/group.hpp"

namespace lcsext::lcs {

using Index = std::uint32_t;

/// Finite abelian group given by its addition table; the neutral element is index 0.
class AdditiveGroup {
 public:
  AdditiveGroup();
  /// Tables in the mixed-radix encoding of `g`.
  static AdditiveGroup from_group(const abelian::FiniteAbelianGroup& g);
  /// Row-major n x n sum table; throws std::invalid_argument unless it is an
  /// abelian group with neutral element 0.
  static AdditiveGroup from_table(std::size_t n, std::vector<Index> sum_table);

  std::size_t size() const { return n_; }
  Index add(Index a, Index b) const { return sum_[a * n_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index multiple(std::int64_t k, Index a) const;

  const std::vector<Index>& sum_table() const { return sum_; }
  /// Cyclic decomposition matching the indexing, when known.
  const std::optional<abelian::FiniteAbelianGroup>& descriptor() const { return descriptor_; }

  friend bool operator==(const AdditiveGroup& a, const AdditiveGroup& b) { return a.sum_ == b.sum_; }

 private:
  std::size_t n_ = 1;
  std::vector<Index> sum_;
  std::vector<Index> neg_;
  std::optional<abelian::FiniteAbelianGroup> descriptor_;
};

/// Additive automorphisms as index permutations, sorted lexicographically.
std::vector<std::vector<Index>> automorphisms(const abelian::FiniteAbelianGroup& g);

}  // namespace lcsext::lcs
