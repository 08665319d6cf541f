#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsext/lcs/linear_cycle_set.hpp"

namespace lcsext::lcs {

/// Abelian group with a second group operation ab (same neutral element 0)
/// satisfying a(b+c) = ab + ac - a.
class Brace {
 public:
  /// Throws std::invalid_argument naming the violated law.
  Brace(AdditiveGroup group, std::vector<Index> mul_table);

  const AdditiveGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }
  Index mul(Index a, Index b) const { return mul_[a * size() + b]; }
  Index inverse(Index a) const { return inv_[a]; }
  const std::vector<Index>& mul_table() const { return mul_; }

 private:
  AdditiveGroup group_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
};

/// Name of the first brace law the table violates, if any.
std::optional<std::string> brace_violation(const AdditiveGroup& group, const std::vector<Index>& mul_table);

/// ab = (the b' with a.b' = b) + a
Brace lcs_to_brace(const LinearCycleSet& L);
/// a.b = a^{-1}(a+b)
LinearCycleSet brace_to_lcs(const Brace& B);

}  // namespace lcsext::lcs
