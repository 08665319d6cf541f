#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsext/lcs/additive_group.hpp"

namespace lcsext::lcs {

struct LcsValidation;

/// An abelian group with a second operation a.b whose left translations are
/// bijective and satisfy a.(b+c) = a.b + a.c and (a+b).c = (a.b).(a.c).
class LinearCycleSet {
 public:
  LinearCycleSet() = default;

  const AdditiveGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }

  Index dot(Index a, Index b) const { return dot_[a * size() + b]; }
  /// The b' with a.b' = b.
  Index inv_dot(Index a, Index b) const { return inv_dot_[a * size() + b]; }
  Index add(Index a, Index b) const { return group_.add(a, b); }
  Index sub(Index a, Index b) const { return group_.sub(a, b); }
  Index neg(Index a) const { return group_.neg(a); }
  /// y.a - a
  Index yleft(Index y, Index a) const { return sub(dot(y, a), a); }

  const std::vector<Index>& dot_table() const { return dot_; }
  std::vector<std::vector<Index>> dot_rows() const;
  bool is_trivial() const;

  friend bool operator==(const LinearCycleSet& a, const LinearCycleSet& b) {
    return a.group_ == b.group_ && a.dot_ == b.dot_;
  }

 private:
  friend LcsValidation lcs_from_table(const AdditiveGroup& group, std::vector<Index> dot_table);
  AdditiveGroup group_;
  std::vector<Index> dot_{0};
  std::vector<Index> inv_dot_{0};
};

enum class Axiom { bijectivity, left_distributivity, cycle_compatibility };

/// Formula or property name of an axiom.
std::string axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  /// (a, b, b') with a.b = a.b' for bijectivity, (a, b, c) otherwise.
  std::vector<Index> witness;
};

/// Validation outcome: the structure when every axiom holds, otherwise the
/// lexicographically first witness of each violated axiom.
struct LcsValidation {
  std::optional<LinearCycleSet> lcs;
  std::vector<AxiomViolation> violations;

  bool valid() const { return lcs.has_value(); }
  /// First violated axiom in the order bijectivity, distributivity, compatibility.
  const AxiomViolation& first() const;
};

/// Throws std::invalid_argument on malformed dimensions or out-of-range entries.
LcsValidation lcs_from_table(const AdditiveGroup& group, std::vector<Index> dot_table);
LcsValidation lcs_from_table(const abelian::FiniteAbelianGroup& group, const std::vector<std::vector<Index>>& rows);

/// Like lcs_from_table but throws std::invalid_argument naming the first violation.
LinearCycleSet make_lcs(const AdditiveGroup& group, std::vector<Index> dot_table);

LinearCycleSet trivial_lcs(const AdditiveGroup& group);
LinearCycleSet trivial_lcs(const abelian::FiniteAbelianGroup& group);

}  // namespace lcsext::lcs
