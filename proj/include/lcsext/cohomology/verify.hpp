#pragma once

#include <string>
#include <vector>

#include "lcsext/cohomology/cochains.hpp"

namespace lcsext::cohomology {

/// A nonzero value of an identity on one generator of C^{rs}.
struct ComplexViolation {
  std::string identity;
  std::size_t r = 0;
  std::size_t s = 1;
  /// Row of the Howell basis of C^{rs}.
  std::size_t generator = 0;
  /// First target tuple where the two sides differ.
  std::vector<Index> tuple;
};

struct ComplexReport {
  /// Number of (identity, bidegree) pairs evaluated.
  std::size_t identities_checked = 0;
  /// First violation of each failing (identity, bidegree) pair.
  std::vector<ComplexViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// On every C^{rs} with r + s <= maxdeg: dh and dv preserve normalized
/// cochains, dh o dh = 0, dv o dv = 0 and dv o dh + dh o dv = 0.
/// Throws ActionLawError if y -> h<>y is not additive.
ComplexReport verify_double_complex(const ComplexSetup& setup, std::size_t maxdeg);

/// The double complex identities plus, on every C^{rs} with r + s <= maxdeg:
/// (d + D) o (d + D) = 0, dv o D = 0, the closed forms of (dh + D) o D,
/// D o dv and D o dh evaluated directly from the action tables, and
/// (dh + D) o D + D o dh + D o dv = 0.  The closed forms use the verbatim
/// signs whatever `setup.sign` is.
ComplexReport verify_total_complex(const ComplexSetup& setup, std::size_t maxdeg);

}  // namespace lcsext::cohomology
