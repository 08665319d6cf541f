#include "lcsext/abelian/group.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcsext/abelian/smith.hpp"

namespace lcsext::abelian {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 p = static_cast<__int128>(a) * b % m;
  if (p < 0) p += m;
  return static_cast<std::int64_t>(p);
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  for (std::int64_t m : orders_) {
    if (m < 1) throw std::invalid_argument("cyclic order must be >= 1, got " + std::to_string(m));
    if (m > (std::int64_t{1} << 40)) throw std::invalid_argument("cyclic order too large");
  }
}

FiniteAbelianGroup group_from_orders(std::vector<std::int64_t> orders) {
  return FiniteAbelianGroup(std::move(orders));
}

FiniteAbelianGroup drop_trivial_factors(const FiniteAbelianGroup& g) {
  std::vector<std::int64_t> kept;
  for (std::int64_t m : g.cyclic_orders())
    if (m > 1) kept.push_back(m);
  return FiniteAbelianGroup(std::move(kept));
}

BigInt FiniteAbelianGroup::order() const {
  BigInt n = 1;
  for (std::int64_t m : orders_) n *= m;
  return n;
}

std::uint64_t FiniteAbelianGroup::size() const {
  BigInt n = order();
  if (n > (BigInt(1) << 62)) throw std::overflow_error("group order " + n.str() + " exceeds machine range");
  return static_cast<std::uint64_t>(n);
}

void FiniteAbelianGroup::check(const GroupElement& x) const {
  if (!contains(x)) throw std::invalid_argument("element is not a reduced member of " + to_string());
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
  if (x.coordinates.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (x.coordinates[i] < 0 || x.coordinates[i] >= orders_[i]) return false;
  return true;
}

GroupElement FiniteAbelianGroup::zero() const { return {Vector(orders_.size(), 0)}; }

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement z = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    z.coordinates[i] += y.coordinates[i];
    if (z.coordinates[i] >= orders_[i]) z.coordinates[i] -= orders_[i];
  }
  return z;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& x) const {
  check(x);
  GroupElement z = x;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    z.coordinates[i] = z.coordinates[i] == 0 ? 0 : orders_[i] - z.coordinates[i];
  return z;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
  return add(x, neg(y));
}

GroupElement FiniteAbelianGroup::multiple(std::int64_t k, const GroupElement& x) const {
  check(x);
  GroupElement z = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) z.coordinates[i] = mul_mod(mod(k, orders_[i]), x.coordinates[i], orders_[i]);
  return z;
}

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
  if (i >= orders_.size()) throw std::out_of_range("generator index");
  GroupElement z = zero();
  z.coordinates[i] = orders_[i] == 1 ? 0 : 1;
  return z;
}

GroupElement FiniteAbelianGroup::element(std::span<const std::int64_t> coordinates) const {
  if (coordinates.size() != orders_.size())
    throw std::invalid_argument("expected " + std::to_string(orders_.size()) + " coordinates");
  GroupElement z{Vector(coordinates.begin(), coordinates.end())};
  for (std::size_t i = 0; i < orders_.size(); ++i) z.coordinates[i] = mod(z.coordinates[i], orders_[i]);
  return z;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("element index " + std::to_string(index));
  GroupElement z = zero();
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto m = static_cast<std::uint64_t>(orders_[i]);
    z.coordinates[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return z;
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  check(x);
  size();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    index = index * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(x.coordinates[i]);
  return index;
}

std::vector<BigInt> FiniteAbelianGroup::invariant_factors() const {
  IntMatrix m(orders_.size(), orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) m(i, i) = orders_[i];
  return cokernel_invariants(m);
}

std::string FiniteAbelianGroup::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) out << (i ? " + " : "") << "Z/" << orders_[i];
  return out.str();
}

}  // namespace lcsext::abelian
