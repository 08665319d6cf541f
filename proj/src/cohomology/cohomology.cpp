#include "lcsext/cohomology/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "lcsext/abelian/hom.hpp"
#include "lcsext/cohomology/complex.hpp"
#include "lcsext/errors.hpp"
#include "lcsext/extension/checks.hpp"
#include "lcsext/lcs/linear_cycle_set.hpp"

namespace lcsext::cohomology {

namespace {

abelian::Subgroup boundaries(const TotalComplex& tc, std::size_t n) {
  if (n == 1) return abelian::Subgroup::trivial(tc.groups[1].ambient());
  return abelian::image_subgroup(tc.d[n - 1]);
}

void put(const ComplexSetup& setup, abelian::Vector& x, std::size_t at, Index y, bool negate) {
  const auto& I = setup.I;
  auto c = (negate ? I.neg(I.element_at(y)) : I.element_at(y)).coordinates;
  std::copy(c.begin(), c.end(), x.begin() + at);
}

Index get(const ComplexSetup& setup, const abelian::Vector& x, std::size_t at, bool negate) {
  const auto& I = setup.I;
  std::vector<std::int64_t> c(x.begin() + at, x.begin() + at + I.rank());
  auto e = I.element(c);
  return static_cast<Index>(I.index_of(negate ? I.neg(e) : e));
}

}  // namespace

BigInt group_order(const std::vector<BigInt>& invariant_factors) {
  BigInt n = 1;
  for (const BigInt& d : invariant_factors) n *= d;
  return n;
}

std::vector<BigInt> cohomology(const ComplexSetup& setup, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cohomology degree must be >= 1");
  TotalComplex tc = total_complex(setup, n);
  return abelian::quotient_invariants(abelian::kernel_subgroup(tc.d[n]), boundaries(tc, n));
}

abelian::Vector degree2_cochain(const ComplexSetup& setup, const Table& beta, const Table& f) {
  const std::size_t nh = setup.H.size();
  const std::uint64_t ni = setup.I.size();
  for (const Table* t : {&beta, &f}) {
    if (t->size() != nh) throw std::invalid_argument("cochain tables must be |H| x |H|");
    for (const auto& row : *t) {
      if (row.size() != nh) throw std::invalid_argument("cochain tables must be |H| x |H|");
      for (Index v : row)
        if (v >= ni) throw std::invalid_argument("cochain value outside I");
    }
  }
  for (Index h = 0; h < nh; ++h) {
    if (beta[h][0] || beta[0][h] || f[h][0] || f[0][h])
      throw std::invalid_argument("cochain tables must vanish when an argument is 0");
    for (Index g = 0; g < nh; ++g)
      if (beta[h][g] != beta[g][h]) throw std::invalid_argument("beta must be symmetric to lie in C^{02}");
  }
  const std::size_t k = setup.I.rank();
  const TupleCodec codec(nh, 2);
  const std::size_t half = codec.count() * k;
  abelian::Vector x(2 * half, 0);
  const bool negate = setup.sign == SignConvention::verbatim;
  for (std::uint64_t t = 0; t < codec.count(); ++t) {
    auto hg = codec.decode(t);
    put(setup, x, t * k, beta[hg[0]][hg[1]], false);
    put(setup, x, half + t * k, f[hg[0]][hg[1]], negate);
  }
  return x;
}

extension::Cocycle degree2_tables(const ComplexSetup& setup, const abelian::Vector& x) {
  const std::size_t nh = setup.H.size(), k = setup.I.rank();
  const TupleCodec codec(nh, 2);
  const std::size_t half = codec.count() * k;
  if (x.size() != 2 * half) throw std::invalid_argument("degree-2 cochain has the wrong width");
  const bool negate = setup.sign == SignConvention::verbatim;
  extension::Cocycle c{extension::constant_table(nh, nh), extension::constant_table(nh, nh)};
  for (std::uint64_t t = 0; t < codec.count(); ++t) {
    auto hg = codec.decode(t);
    c.beta[hg[0]][hg[1]] = get(setup, x, t * k, false);
    c.f[hg[0]][hg[1]] = get(setup, x, half + t * k, negate);
  }
  return c;
}

abelian::Vector degree1_cochain(const ComplexSetup& setup, const std::vector<Index>& phi) {
  const std::size_t nh = setup.H.size(), k = setup.I.rank();
  if (phi.size() != nh || phi[0] != 0) throw std::invalid_argument("phi must have |H| entries with phi(0) = 0");
  abelian::Vector x((nh - 1) * k, 0);
  for (Index h = 1; h < nh; ++h) {
    if (phi[h] >= setup.I.size()) throw std::invalid_argument("phi value outside I");
    put(setup, x, (h - 1) * k, phi[h], setup.sign == SignConvention::verbatim);
  }
  return x;
}

std::vector<Index> degree1_table(const ComplexSetup& setup, const abelian::Vector& x) {
  const std::size_t nh = setup.H.size(), k = setup.I.rank();
  std::vector<Index> phi(nh, 0);
  for (Index h = 1; h < nh; ++h) phi[h] = get(setup, x, (h - 1) * k, setup.sign == SignConvention::verbatim);
  return phi;
}

CocycleVerdicts cocycle_verdicts(const ComplexSetup& setup, const Table& beta, const Table& f) {
  abelian::Vector x = degree2_cochain(setup, beta, f);
  TotalComplex tc = total_complex(setup, 2);
  CocycleVerdicts v;
  v.matrix = true;
  for (std::int64_t c : tc.d[2].apply(x)) v.matrix &= c == 0;

  const LinearCycleSet I = lcs::trivial_lcs(setup.I);
  extension::ExtensionData d{I, setup.H, beta, f, setup.diamond, setup.yleft};
  const extension::CheckReport r = extension::check_trivial_ideal(d);
  v.direct = true;
  for (const char* key : {"beta_cocycle", "beta_normalized_symmetric", "dot_sum", "f_compat"}) v.direct &= r.at(key).pass;
  return v;
}

bool is_2cocycle(const ComplexSetup& setup, const Table& beta, const Table& f) {
  CocycleVerdicts v = cocycle_verdicts(setup, beta, f);
  if (v.matrix != v.direct) throw std::logic_error("d^2 disagrees with the direct cocycle conditions");
  return v.matrix;
}

std::optional<std::vector<Index>> is_2coboundary(const ComplexSetup& setup, const Table& beta, const Table& f) {
  if (!is_2cocycle(setup, beta, f)) throw std::invalid_argument("(beta, f) is not a 2-cocycle");
  TotalComplex tc = total_complex(setup, 2);
  auto pre = abelian::preimage(tc.d[1], degree2_cochain(setup, beta, f));
  if (!pre) return std::nullopt;
  return degree1_table(setup, *pre);
}

std::vector<extension::Cocycle> h2_representatives(const ComplexSetup& setup, std::size_t max_classes) {
  TotalComplex tc = total_complex(setup, 2);
  const abelian::Subgroup Z = abelian::kernel_subgroup(tc.d[2]);
  const abelian::Subgroup B = boundaries(tc, 2);
  const auto& mod = Z.ambient().cyclic_orders();
  std::set<abelian::Vector> seen{B.reduce(abelian::Vector(mod.size(), 0))};
  std::vector<abelian::Vector> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<abelian::Vector> next;
    for (const abelian::Vector& x : frontier)
      for (const abelian::Vector& g : Z.basis()) {
        abelian::Vector y(x.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = abelian::mod(x[i] + g[i], mod[i]);
        y = B.reduce(y);
        if (seen.insert(y).second) {
          if (seen.size() > max_classes)
            throw GuardError("H^2 has more than " + std::to_string(max_classes) + " classes");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<extension::Cocycle> out;
  for (const abelian::Vector& x : seen) out.push_back(degree2_tables(setup, x));
  std::sort(out.begin(), out.end());
  return out;
}

ExtVsH2Report ext_vs_h2_report(const LinearCycleSet& I, const LinearCycleSet& H,
                               const extension::ActionPair& actions, const extension::ClassifyLimits& limits,
                               SignConvention sign) {
  if (!I.is_trivial()) throw std::invalid_argument("ext_vs_h2_report needs a trivial I");
  const auto& desc = I.group().descriptor();
  if (!desc) throw std::invalid_argument("I must carry a cyclic decomposition");
  ExtVsH2Report rep;
  rep.classification = extension::classify_extensions(I, H, actions, limits);
  const ComplexSetup setup = make_setup(H, *desc, actions, sign);
  rep.h2_invariants = cohomology(setup, 2);
  rep.h2_order = group_order(rep.h2_invariants);
  rep.class_count = rep.classification.class_count();
  rep.counts_agree = rep.h2_order == rep.class_count;

  TotalComplex tc = total_complex(setup, 2);
  const abelian::Subgroup B = boundaries(tc, 2);
  const auto& cs = rep.classification.cocycles;
  std::vector<abelian::Vector> coset;
  for (const auto& c : cs) coset.push_back(B.reduce(degree2_cochain(setup, c.beta, c.f)));
  rep.coboundary_matches_equivalence = true;
  for (std::size_t i = 0; i < cs.size() && !rep.mismatch; ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if ((coset[i] == coset[j]) != (rep.classification.class_of[i] == rep.classification.class_of[j])) {
        rep.coboundary_matches_equivalence = false;
        rep.mismatch = std::make_pair(i, j);
        break;
      }
  return rep;
}

}  // namespace lcsext::cohomology
