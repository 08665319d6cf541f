#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lcsext/abelian/hom.hpp"
#include "lcsext/cohomology/cochains.hpp"

namespace lcsext::cohomology {

/// k x k integer matrix of an endomorphism of I on its cyclic coordinates.
using Mat = std::vector<std::int64_t>;

struct Term {
  std::uint64_t tuple;
  std::int64_t sign;
  const Mat* mat;
};

enum class Piece { h, v, D };

/// Differential terms and matrix assembly for one setup.
class Engine {
 public:
  /// Throws ActionLawError unless every y -> h<>y and y -> y<|h is additive.
  explicit Engine(const ComplexSetup& setup);

  const ComplexSetup& setup() const { return setup_; }
  std::size_t rank() const { return k_; }
  const std::vector<std::int64_t>& moduli() const { return setup_.I.cyclic_orders(); }

  /// Terms of piece(f)(u) for f on bidegree (r, s); u has the target length.
  void terms(Piece piece, std::size_t r, std::size_t s, const std::vector<Index>& u, std::vector<Term>& out) const;
  /// Target bidegree of a piece.
  static std::pair<std::size_t, std::size_t> target(Piece piece, std::size_t r, std::size_t s);

  /// Matrix of one piece between ambient function groups.
  abelian::SparseMatrix matrix(Piece piece, std::size_t r, std::size_t s) const;

  const CochainGroup& group(std::size_t r, std::size_t s);

  /// M x reduced by the moduli of I.
  std::vector<std::int64_t> apply(const Mat& m, const std::vector<std::int64_t>& x) const;

 private:
  Mat product(const Mat& a, const Mat& b) const;

  const ComplexSetup& setup_;
  std::size_t k_;
  Mat identity_;
  std::vector<Mat> diamond_;
  std::vector<Mat> yleft_;
  /// yleft_diamond_[a][b] = (<|a) o (b<>)
  std::vector<std::vector<Mat>> yleft_diamond_;
  std::map<std::pair<std::size_t, std::size_t>, CochainGroup> groups_;
};

}  // namespace lcsext::cohomology
