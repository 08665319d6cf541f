#pragma once

#include <optional>
#include <vector>

#include "lcsext/abelian/group.hpp"

namespace lcsext::abelian {

/// Subgroup of an explicit ambient FiniteAbelianGroup.
///
/// Stored as a Howell echelon basis: row k has leading column pivot(k), and
/// for every column j the rows with leading column >= j generate exactly the
/// elements of the subgroup whose first j coordinates vanish.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup whole(const FiniteAbelianGroup& ambient);
  static Subgroup trivial(const FiniteAbelianGroup& ambient);
  static Subgroup generated_by(const FiniteAbelianGroup& ambient, std::vector<Vector> generators);

  const FiniteAbelianGroup& ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return rows_; }
  std::size_t pivot(std::size_t k) const { return pivots_[k]; }

  BigInt order() const;
  bool contains(const Vector& x) const;
  bool contains(const Subgroup& other) const;
  bool is_trivial() const { return rows_.empty(); }

  /// Least coset representative of x + S in the encoding order.
  Vector reduce(const Vector& x) const;
  /// Coefficients c with x = sum c_k basis_k, if x lies in the subgroup.
  std::optional<std::vector<std::int64_t>> coefficients(const Vector& x) const;

  /// Additive order of each basis row.
  std::vector<std::int64_t> basis_orders() const;

  /// Invariant factors of the subgroup itself.
  std::vector<BigInt> invariant_factors() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.contains(b) && b.contains(a);
  }

 private:
  FiniteAbelianGroup ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Result of eliminating the leading `split` columns of a row set.
struct EchelonSplit {
  std::vector<Vector> pivot_rows;
  std::vector<std::size_t> pivots;
  /// Rows of the row module whose leading `split` coordinates all vanish.
  std::vector<Vector> tail_rows;
};

/// Howell elimination of `rows` over the given moduli, stopped after `split` columns.
EchelonSplit howell_split(std::vector<Vector> rows, const std::vector<std::int64_t>& moduli,
                          std::size_t split);

/// Invariant factors of G / S for subgroups S <= G of the same ambient.
std::vector<BigInt> quotient_invariants(const Subgroup& G, const Subgroup& S);

}  // namespace lcsext::abelian
