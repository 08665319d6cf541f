#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcsext::abelian {

using BigInt = boost::multiprecision::cpp_int;

/// Coordinate vector of an element of a direct sum of cyclic groups.
using Vector = std::vector<std::int64_t>;

struct GroupElement {
  Vector coordinates;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Direct sum Z/m_1 (+) ... (+) Z/m_k with the orders kept exactly as given.
///
/// Elements are indexed by the mixed-radix encoding of their coordinates,
/// last coordinate varying fastest.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders);

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t cyclic_order(std::size_t i) const { return orders_[i]; }

  BigInt order() const;
  /// Element count as a machine integer; throws std::overflow_error above 2^62.
  std::uint64_t size() const;

  GroupElement zero() const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement multiple(std::int64_t k, const GroupElement& x) const;
  GroupElement generator(std::size_t i) const;

  bool contains(const GroupElement& x) const;
  /// Reduces arbitrary integer coordinates into canonical form.
  GroupElement element(std::span<const std::int64_t> coordinates) const;
  GroupElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const GroupElement& x) const;

  /// Invariant factors d_1 | d_2 | ... with all d_i > 1.
  std::vector<BigInt> invariant_factors() const;

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  void check(const GroupElement& x) const;

  std::vector<std::int64_t> orders_;
};

FiniteAbelianGroup group_from_orders(std::vector<std::int64_t> orders);

/// Same group with every factor of order 1 removed.
FiniteAbelianGroup drop_trivial_factors(const FiniteAbelianGroup& g);

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace lcsext::abelian
