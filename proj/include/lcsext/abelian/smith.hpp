#pragma once

#include <cstddef>
#include <vector>

#include "lcsext/abelian/group.hpp"

namespace lcsext::abelian {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
};

/// U * M * V = S with S diagonal, nonnegative and d_i | d_{i+1}.
SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Diagonal of the Smith form only (no transforms tracked).
std::vector<BigInt> smith_diagonal(IntMatrix M);

/// Invariant factors (> 1) of Z^rows / column span of M; a zero entry marks a free summand.
std::vector<BigInt> cokernel_invariants(const IntMatrix& M);

}  // namespace lcsext::abelian
