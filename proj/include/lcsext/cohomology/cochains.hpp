#pragma once

#include <cstdint>
#include <vector>

#include "lcsext/abelian/hom.hpp"
#include "lcsext/abelian/subgroup.hpp"
#include "lcsext/extension/classify.hpp"

namespace lcsext::cohomology {

using extension::Index;
using extension::LinearCycleSet;
using extension::Table;

inline constexpr std::uint64_t kDefaultMaxTuples = 100'000;

/// Signs of the vertical and diagonal differentials.
///
/// `corollary` uses -(-1)^r ... for the vertical map, so that
/// dv(phi)(h1,h2) = -phi(h2) + phi(h1+h2) - phi(h1), and (-1)^(r+1) for D.
/// `verbatim` uses the general displays, (-1)^r ... and (-1)^(r+s).  The two
/// complexes are isomorphic through f -> (-1)^s f on C^{rs}.
enum class SignConvention { corollary, verbatim };

/// H, the group I, the actions h<>y ([h][y]) and y<|h ([y][h]) on element
/// indices of I in its mixed-radix encoding.
struct ComplexSetup {
  LinearCycleSet H;
  abelian::FiniteAbelianGroup I;
  Table diamond;
  Table yleft;
  SignConvention sign = SignConvention::corollary;
  std::uint64_t max_tuples = kDefaultMaxTuples;
};

/// Checks table shapes; throws std::invalid_argument.
ComplexSetup make_setup(LinearCycleSet H, abelian::FiniteAbelianGroup I, Table diamond, Table yleft,
                        SignConvention sign = SignConvention::corollary,
                        std::uint64_t max_tuples = kDefaultMaxTuples);
ComplexSetup make_setup(const LinearCycleSet& H, const abelian::FiniteAbelianGroup& I,
                        const extension::ActionPair& actions, SignConvention sign = SignConvention::corollary,
                        std::uint64_t max_tuples = kDefaultMaxTuples);
/// h<>y = y and y<|h = 0.
ComplexSetup trivial_setup(const LinearCycleSet& H, const abelian::FiniteAbelianGroup& I);

/// Tuples of H\{0} of a fixed length, numbered with the first slot most significant.
class TupleCodec {
 public:
  TupleCodec(std::size_t h_order, std::size_t length);

  std::size_t length() const { return length_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t encode(const std::vector<Index>& tuple) const;
  std::vector<Index> decode(std::uint64_t index) const;

 private:
  std::uint64_t base_;
  std::size_t length_;
  std::uint64_t count_;
};

/// |H\{0}|^n, or GuardError when it exceeds the setup limit.
std::uint64_t tuple_count(const ComplexSetup& setup, std::size_t n);

/// Functions H\{0}^{r+s} -> I annihilated by the signed shuffles in the last s
/// slots.  Ambient coordinate tuple * rank(I) + j holds coordinate j of the value.
struct CochainGroup {
  std::size_t r = 0;
  std::size_t s = 1;
  std::uint64_t tuples = 0;
  abelian::Subgroup group;

  const abelian::FiniteAbelianGroup& ambient() const { return group.ambient(); }
};

/// I^{tuples} as a FiniteAbelianGroup.
abelian::FiniteAbelianGroup function_group(const abelian::FiniteAbelianGroup& I, std::uint64_t tuples);

/// Throws std::invalid_argument for s = 0 and GuardError past the tuple limit.
CochainGroup cochain_group(const ComplexSetup& setup, std::size_t r, std::size_t s);

/// Signed shuffle sums sum_sigma sg(sigma) f(h_1..h_r, h_{r+sigma^-1(1)}, ...) for
/// every tuple and 1 <= l < s; zero iff f is normalized.
abelian::SparseMatrix shuffle_relations(const ComplexSetup& setup, std::size_t r, std::size_t s);

/// Value of a cochain at a tuple as an element index of I; 0 if any entry is 0.
Index evaluate(const ComplexSetup& setup, const abelian::Vector& cochain, const std::vector<Index>& tuple);

}  // namespace lcsext::cohomology
