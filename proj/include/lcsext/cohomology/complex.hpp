#pragma once

#include <vector>

#include "lcsext/abelian/hom.hpp"
#include "lcsext/cohomology/cochains.hpp"

namespace lcsext::cohomology {

/// dh: C^{rs} -> C^{r+1,s},
/// f(h1.h2, ..., h1.h_{r+s+1}) + sum_j (-1)^j f(.., hj+h_{j+1}, ..)
/// + (-1)^{r+1} R_{r1}(h_{1..r+1})<>f(h_1..h_r, h_{r+2}..).
/// Throws ActionLawError if the actions are not additive or the map leaves
/// the normalized cochains.
abelian::GroupHom diff_h(const ComplexSetup& setup, std::size_t r, std::size_t s);

/// dv: C^{rs} -> C^{r,s+1}, the bar differential on the last s slots with the
/// signs of `setup.sign`.
abelian::GroupHom diff_v(const ComplexSetup& setup, std::size_t r, std::size_t s);

/// D: C^{rs} -> C^{r+s,1}, (R_{rs}(h_{1..r+s})<>f(h_{1..r+s}))<|R_{r+s,1}(h_{1..r+s+1})
/// with sign (-1)^(r+1) (corollary) or (-1)^(r+s) (verbatim).
abelian::GroupHom diff_D(const ComplexSetup& setup, std::size_t r, std::size_t s);

/// C^n = C^{0n} + C^{1,n-1} + ... + C^{n-1,1} with d = dh + dv + D.
struct TotalComplex {
  std::size_t top = 0;
  /// groups[n] for 1 <= n <= top + 1; entry 0 is unused.
  std::vector<abelian::Subgroup> groups;
  /// d[n]: C^n -> C^{n+1} for 1 <= n <= top.
  std::vector<abelian::GroupHom> d;
  /// offsets[n][r]: first ambient coordinate of the C^{r,n-r} summand.
  std::vector<std::vector<std::size_t>> offsets;
};

/// Differentials d^1 .. d^top.  Throws std::invalid_argument for top = 0,
/// GuardError past the tuple limit and ActionLawError as diff_h.
TotalComplex total_complex(const ComplexSetup& setup, std::size_t top);

}  // namespace lcsext::cohomology
