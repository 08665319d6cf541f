#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcsext/abelian/subgroup.hpp"

namespace lcsext::abelian {

/// Sparse integer matrix in compressed row form; column j holds the image of
/// the j-th ambient generator of the domain.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    std::int64_t value;
  };

  SparseMatrix() = default;
  /// Zero matrix.
  SparseMatrix(std::size_t rows, std::size_t cols);
  /// No rows yet; fill with push_row.
  static SparseMatrix empty(std::size_t cols);
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0);

  std::size_t rows() const { return offsets_.size() - 1; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  /// Appends the next row; entries with equal columns are summed.
  void push_row(std::vector<Entry> entries);
  std::span<const Entry> row(std::size_t r) const;

  /// Reduces row r modulo moduli[r] (rows must be complete).
  SparseMatrix reduced(const std::vector<std::int64_t>& row_moduli) const;
  /// this * x, reduced row-wise by row_moduli.
  Vector apply(const Vector& x, const std::vector<std::int64_t>& row_moduli) const;
  /// this * rhs, reduced row-wise by row_moduli.
  SparseMatrix multiply(const SparseMatrix& rhs, const std::vector<std::int64_t>& row_moduli) const;
  /// this + rhs, reduced row-wise by row_moduli.
  SparseMatrix add(const SparseMatrix& rhs, const std::vector<std::int64_t>& row_moduli) const;
  std::vector<std::vector<std::int64_t>> dense() const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
};

/// Homomorphism between subgroups of two ambients, given by an integer matrix
/// on ambient coordinates.
class GroupHom {
 public:
  GroupHom() = default;
  /// Throws std::invalid_argument if the matrix does not respect the ambient
  /// relations or maps a domain generator outside the codomain.
  GroupHom(Subgroup domain, Subgroup codomain, SparseMatrix matrix);

  static GroupHom identity(const Subgroup& g);
  static GroupHom zero(const Subgroup& domain, const Subgroup& codomain);
  static GroupHom multiplication(const Subgroup& g, std::int64_t k);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& codomain() const { return codomain_; }
  const SparseMatrix& matrix() const { return matrix_; }

  Vector apply(const Vector& x) const;
  GroupElement operator()(const GroupElement& x) const;
  /// this after `first`.
  GroupHom compose(const GroupHom& first) const;

 private:
  struct Unchecked {};
  GroupHom(Subgroup domain, Subgroup codomain, SparseMatrix matrix, Unchecked);
  friend GroupHom unchecked_hom(Subgroup, Subgroup, SparseMatrix);

  Subgroup domain_;
  Subgroup codomain_;
  SparseMatrix matrix_;
};

/// Builds a hom whose well-definedness the caller guarantees.
GroupHom unchecked_hom(Subgroup domain, Subgroup codomain, SparseMatrix matrix);

struct SubgroupWithInclusion {
  Subgroup group;
  GroupHom inclusion;
};

SubgroupWithInclusion hom_kernel(const GroupHom& h);
SubgroupWithInclusion hom_image(const GroupHom& h);
/// Kernel only, without the structure map.
Subgroup kernel_subgroup(const GroupHom& h);
Subgroup image_subgroup(const GroupHom& h);

/// Invariant factors of G / inclusion(S).  Throws std::invalid_argument if the
/// inclusion does not land in G or is not injective.
std::vector<BigInt> quotient_invariants(const Subgroup& G, const GroupHom& inclusion);

/// Least x in the domain (encoding order) with h(x) = y, if any.
std::optional<Vector> preimage(const GroupHom& h, const Vector& y);

}  // namespace lcsext::abelian
