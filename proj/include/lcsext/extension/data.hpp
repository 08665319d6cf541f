#pragma once

#include <string>
#include <vector>

#include "lcsext/lcs/linear_cycle_set.hpp"

namespace lcsext::extension {

using lcs::Index;
using lcs::LinearCycleSet;

/// Row-major table of element indices; compared lexicographically.
using Table = std::vector<std::vector<Index>>;

Table constant_table(std::size_t rows, std::size_t cols, Index value = 0);
/// h<>y = y
Table trivial_diamond(const LinearCycleSet& I, const LinearCycleSet& H);
/// y<|h = 0
Table zero_yleft(const LinearCycleSet& I, const LinearCycleSet& H);

/// Cocycle data (beta, f, <>, <|) for building I x H.
///
/// beta and f are indexed [h][h'], diamond [h][y] (h<>y) and yleft [y][h] (y<|h).
struct ExtensionData {
  LinearCycleSet I;
  LinearCycleSet H;
  Table beta;
  Table f;
  Table diamond;
  Table yleft;

  Index dia(Index h, Index y) const { return diamond[h][y]; }
  Index yl(Index y, Index h) const { return yleft[y][h]; }

  friend bool operator==(const ExtensionData&, const ExtensionData&) = default;
};

/// Violated construction invariants, in a fixed order: table shapes, the
/// abelian cocycle law, normalization and symmetry of beta, additivity of
/// y -> h<>y, 0<>y = y, 0<|h = 0, y<|0 = 0, and f(h,0) = f(0,h) = 0.
std::vector<std::string> data_violations(const ExtensionData& d);

/// Throws std::invalid_argument listing the first violated invariant.
ExtensionData make_extension_data(LinearCycleSet I, LinearCycleSet H, Table beta, Table f, Table diamond,
                                  Table yleft);

/// True iff every y -> h<>y is a permutation of I.
bool diamond_is_bijective(const ExtensionData& d);

}  // namespace lcsext::extension
