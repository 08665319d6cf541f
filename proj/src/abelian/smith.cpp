#include "lcsext/abelian/smith.hpp"

#include <stdexcept>
#include <utility>

namespace lcsext::abelian {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

namespace {

// Diagonalizes M in place; U and V (if given) accumulate the row and column operations.
void diagonalize(IntMatrix& M, IntMatrix* U, IntMatrix* V) {
  const std::size_t rows = M.rows();
  const std::size_t cols = M.cols();
  const std::size_t steps = std::min(rows, cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    M.swap_rows(a, b);
    if (U) U->swap_rows(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    M.swap_cols(a, b);
    if (V) V->swap_cols(a, b);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    M.add_row_multiple(dst, src, k);
    if (U) U->add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    M.add_col_multiple(dst, src, k);
    if (V) V->add_col_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    // Global minimal pivot for this step.
    std::size_t pr = rows, pc = cols;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const BigInt& v = M(i, j);
        if (v == 0) continue;
        BigInt a = abs(v);
        if (pr == rows || a < best) {
          best = a;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
    if (pr == rows) return;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (M(i, t) == 0) continue;
        BigInt q = M(i, t) / M(t, t);
        row_op(i, t, -q);
        if (M(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (M(t, j) == 0) continue;
        BigInt q = M(t, j) / M(t, t);
        col_op(j, t, -q);
        if (M(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot sits in row t or column t.
        std::size_t br = t, bc = t;
        BigInt small = abs(M(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (M(i, t) != 0 && abs(M(i, t)) < small) {
            small = abs(M(i, t));
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (M(t, j) != 0 && abs(M(t, j)) < small) {
            small = abs(M(t, j));
            br = t;
            bc = j;
          }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (M(i, j) % M(t, t) != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (M(t, t) < 0) {
      M.negate_row(t);
      if (U) U->negate_row(t);
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  SmithDecomposition d{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  diagonalize(d.S, &d.U, &d.V);
  return d;
}

std::vector<BigInt> smith_diagonal(IntMatrix M) {
  diagonalize(M, nullptr, nullptr);
  std::vector<BigInt> diag;
  for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) diag.push_back(M(i, i));
  return diag;
}

std::vector<BigInt> cokernel_invariants(const IntMatrix& M) {
  std::vector<BigInt> diag = smith_diagonal(M);
  diag.resize(M.rows(), BigInt(0));
  std::vector<BigInt> out;
  for (BigInt& d : diag)
    if (d != 1) out.push_back(std::move(d));
  return out;
}

}  // namespace lcsext::abelian
