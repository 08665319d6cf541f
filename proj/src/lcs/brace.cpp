#include "lcsext/lcs/brace.hpp"

#include <stdexcept>

namespace lcsext::lcs {

std::optional<std::string> brace_violation(const AdditiveGroup& group, const std::vector<Index>& mul_table) {
  const std::size_t n = group.size();
  if (mul_table.size() != n * n) return "multiplication table must be n x n";
  for (Index v : mul_table)
    if (v >= n) return "multiplication table entry out of range";
  auto mul = [&](Index a, Index b) { return mul_table[a * n + b]; };
  for (Index a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) return "0 is not the multiplicative identity";
  for (Index a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Index b = 0; b < n; ++b) has_inverse |= mul(a, b) == 0 && mul(b, a) == 0;
    if (!has_inverse) return "element " + std::to_string(a) + " has no multiplicative inverse";
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplication is not associative";
        if (mul(a, group.add(b, c)) != group.sub(group.add(mul(a, b), mul(a, c)), a)) return "a(b+c) = ab + ac - a fails";
      }
  return std::nullopt;
}

Brace::Brace(AdditiveGroup group, std::vector<Index> mul_table) : group_(std::move(group)), mul_(std::move(mul_table)) {
  if (auto v = brace_violation(group_, mul_)) throw std::invalid_argument("not a brace: " + *v);
  inv_.assign(size(), 0);
  for (Index a = 0; a < size(); ++a)
    for (Index b = 0; b < size(); ++b)
      if (mul(a, b) == 0) inv_[a] = b;
}

Brace lcs_to_brace(const LinearCycleSet& L) {
  const std::size_t n = L.size();
  std::vector<Index> mul(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) mul[a * n + b] = L.add(L.inv_dot(a, b), a);
  return Brace(L.group(), std::move(mul));
}

LinearCycleSet brace_to_lcs(const Brace& B) {
  const std::size_t n = B.size();
  std::vector<Index> dot(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) dot[a * n + b] = B.mul(B.inverse(a), B.group().add(a, b));
  return make_lcs(B.group(), std::move(dot));
}

}  // namespace lcsext::lcs
