#include "lcsext/cohomology/verify.hpp"

#include <map>
#include <optional>
#include <tuple>

#include "engine.hpp"
#include "lcsext/lcs/additive_group.hpp"

namespace lcsext::cohomology {

namespace {

using abelian::Vector;
using Bidegree = std::pair<std::size_t, std::size_t>;
/// A cochain spread over bidegrees of one total degree.
using Spread = std::map<Bidegree, Vector>;

class Verifier {
 public:
  Verifier(const ComplexSetup& setup, ComplexReport& report) : engine_(setup), report_(report) {}

  Engine& engine() { return engine_; }

  std::vector<std::int64_t> moduli(const Bidegree& b) {
    return function_group(engine_.setup().I, tuple_count(engine_.setup(), b.first + b.second)).cyclic_orders();
  }

  Vector apply(Piece p, const Bidegree& b, const Vector& x) {
    auto key = std::make_tuple(static_cast<int>(p), b.first, b.second);
    auto it = matrices_.find(key);
    if (it == matrices_.end()) it = matrices_.emplace(key, engine_.matrix(p, b.first, b.second)).first;
    return it->second.apply(x, moduli(Engine::target(p, b.first, b.second)));
  }

  void accumulate(Spread& acc, const Bidegree& b, const Vector& x) {
    auto it = acc.find(b);
    if (it == acc.end()) {
      acc.emplace(b, x);
      return;
    }
    const auto mod = moduli(b);
    for (std::size_t i = 0; i < x.size(); ++i) it->second[i] = abelian::mod(it->second[i] + x[i], mod[i]);
  }

  /// First tuple where x is nonzero.
  std::optional<std::vector<Index>> nonzero(const Bidegree& b, const Vector& x) {
    const std::size_t k = engine_.rank();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) return TupleCodec(engine_.setup().H.size(), b.first + b.second).decode(i / k);
    return std::nullopt;
  }

  /// Records the first failure of `identity` on C^{rs}.
  class Tracker {
   public:
    Tracker(Verifier& v, std::string identity, Bidegree src) : v_(v), identity_(std::move(identity)), src_(src) {
      ++v_.report_.identities_checked;
    }
    bool failed() const { return failed_; }
    void zero(std::size_t gen, const Bidegree& b, const Vector& x) {
      if (failed_) return;
      if (auto t = v_.nonzero(b, x)) fail(gen, *t);
    }
    void zero(std::size_t gen, const Spread& spread) {
      for (const auto& [b, x] : spread) zero(gen, b, x);
    }
    void inside(std::size_t gen, const Bidegree& b, const Vector& x) {
      if (failed_ || v_.engine_.group(b.first, b.second).group.contains(x)) return;
      fail(gen, {});
    }
    void fail(std::size_t gen, std::vector<Index> tuple) {
      failed_ = true;
      v_.report_.violations.push_back({identity_, src_.first, src_.second, gen, std::move(tuple)});
    }

   private:
    Verifier& v_;
    std::string identity_;
    Bidegree src_;
    bool failed_ = false;
  };

 private:
  Engine engine_;
  ComplexReport& report_;
  std::map<std::tuple<int, std::size_t, std::size_t>, abelian::SparseMatrix> matrices_;
};

void double_identities(Verifier& v, std::size_t maxdeg) {
  for (std::size_t n = 1; n <= maxdeg; ++n)
    for (std::size_t r = 0; r < n; ++r) {
      const Bidegree src{r, n - r};
      const Bidegree th{r + 1, n - r}, tv{r, n - r + 1};
      const auto& basis = v.engine().group(r, n - r).group.basis();
      Verifier::Tracker keep_h(v, "dh preserves normalized cochains", src);
      Verifier::Tracker keep_v(v, "dv preserves normalized cochains", src);
      Verifier::Tracker hh(v, "dh o dh = 0", src);
      Verifier::Tracker vv(v, "dv o dv = 0", src);
      Verifier::Tracker hv(v, "dv o dh + dh o dv = 0", src);
      for (std::size_t g = 0; g < basis.size(); ++g) {
        Vector xh = v.apply(Piece::h, src, basis[g]);
        Vector xv = v.apply(Piece::v, src, basis[g]);
        keep_h.inside(g, th, xh);
        keep_v.inside(g, tv, xv);
        hh.zero(g, {r + 2, n - r}, v.apply(Piece::h, th, xh));
        vv.zero(g, {r, n - r + 2}, v.apply(Piece::v, tv, xv));
        Spread mixed;
        v.accumulate(mixed, {r + 1, n - r + 1}, v.apply(Piece::v, th, xh));
        v.accumulate(mixed, {r + 1, n - r + 1}, v.apply(Piece::h, tv, xv));
        hv.zero(g, mixed);
      }
    }
}

/// Closed forms of the three compositions into C^{n+1,1} from C^{p,k}, n = p + k.
class ClosedForms {
 public:
  explicit ClosedForms(const ComplexSetup& setup)
      : setup_(setup), I_(lcs::AdditiveGroup::from_group(setup.I)), H_(setup.H) {}

  enum class Which { partial_h_D, D_partial_v, D_partial_h };

  Vector evaluate_all(Which which, std::size_t p, std::size_t k, const Vector& beta) const {
    const std::size_t n = p + k;
    const TupleCodec codec(H_.size(), n + 2);
    const std::size_t rank = setup_.I.rank();
    Vector out(codec.count() * rank, 0);
    for (std::uint64_t t = 0; t < codec.count(); ++t) {
      Index y = value(which, p, k, beta, codec.decode(t));
      auto c = setup_.I.element_at(y).coordinates;
      std::copy(c.begin(), c.end(), out.begin() + t * rank);
    }
    return out;
  }

 private:
  Index sum(const std::vector<Index>& u, std::size_t from, std::size_t to) const {
    Index acc = 0;
    for (std::size_t i = from; i < to; ++i) acc = H_.add(acc, u[i]);
    return acc;
  }
  Index R(const std::vector<Index>& u, std::size_t a, std::size_t b) const {
    return H_.dot(sum(u, 0, a), sum(u, a, a + b));
  }
  static std::vector<Index> merged(const std::vector<Index>& u, std::size_t len, std::size_t j, const LinearCycleSet& H) {
    std::vector<Index> w(u.begin(), u.begin() + j - 1);
    w.push_back(H.add(u[j - 1], u[j]));
    w.insert(w.end(), u.begin() + j + 1, u.begin() + len);
    return w;
  }

  Index value(Which which, std::size_t p, std::size_t k, const Vector& beta, const std::vector<Index>& u) const {
    const std::size_t n = p + k;
    const Index Rt = R(u, n + 1, 1);
    const Index Ra = R(u, p + 1, k), Rb = R(u, p, k + 1);
    Index acc = 0;
    auto term = [&](std::int64_t sign, Index Rm, const std::vector<Index>& args) {
      Index y = setup_.yleft[setup_.diamond[Rm][cohomology::evaluate(setup_, beta, args)]][Rt];
      acc = sign > 0 ? I_.add(acc, y) : I_.sub(acc, y);
    };
    auto alt = [](std::size_t e) -> std::int64_t { return e % 2 ? -1 : 1; };
    std::vector<Index> dotted, head(u.begin(), u.begin() + n), skip(u.begin(), u.begin() + p);
    for (std::size_t i = 1; i <= n; ++i) dotted.push_back(H_.dot(u[0], u[i]));
    skip.insert(skip.end(), u.begin() + p + 1, u.begin() + n + 1);
    switch (which) {
      case Which::partial_h_D:
        term(alt(n), Ra, dotted);
        for (std::size_t j = 1; j <= p; ++j) term(alt(n + j), Ra, merged(u, n + 1, j, H_));
        for (std::size_t j = p + 1; j <= n; ++j) term(alt(n + j), Rb, merged(u, n + 1, j, H_));
        term(-1, Rb, head);
        break;
      case Which::D_partial_v:
        term(alt(k + 1), Rb, skip);
        for (std::size_t j = p + 1; j <= n; ++j) term(alt(n + j + 1), Rb, merged(u, n + 1, j, H_));
        term(1, Rb, head);
        break;
      case Which::D_partial_h:
        term(alt(n + 1), Ra, dotted);
        for (std::size_t j = 1; j <= p; ++j) term(alt(n + j + 1), Ra, merged(u, n + 1, j, H_));
        term(alt(k), Rb, skip);
        break;
    }
    return acc;
  }

  const ComplexSetup& setup_;
  lcs::AdditiveGroup I_;
  const LinearCycleSet& H_;
};

}  // namespace

ComplexReport verify_double_complex(const ComplexSetup& setup, std::size_t maxdeg) {
  ComplexReport report;
  Verifier v(setup, report);
  double_identities(v, maxdeg);
  return report;
}

ComplexReport verify_total_complex(const ComplexSetup& setup, std::size_t maxdeg) {
  ComplexReport report;
  {
    Verifier v(setup, report);
    double_identities(v, maxdeg);
    for (std::size_t n = 1; n <= maxdeg; ++n)
      for (std::size_t r = 0; r < n; ++r) {
        const Bidegree src{r, n - r};
        const auto& basis = v.engine().group(r, n - r).group.basis();
        Verifier::Tracker square(v, "(d + D) o (d + D) = 0", src);
        for (std::size_t g = 0; g < basis.size(); ++g) {
          Spread once, twice;
          for (Piece p : {Piece::h, Piece::v, Piece::D}) v.accumulate(once, Engine::target(p, r, n - r), v.apply(p, src, basis[g]));
          for (const auto& [b, x] : once)
            for (Piece p : {Piece::h, Piece::v, Piece::D}) v.accumulate(twice, Engine::target(p, b.first, b.second), v.apply(p, b, x));
          square.zero(g, twice);
        }
      }
  }

  ComplexSetup verbatim = setup;
  verbatim.sign = SignConvention::verbatim;
  Verifier v(verbatim, report);
  ClosedForms closed(verbatim);
  using W = ClosedForms::Which;
  for (std::size_t n = 1; n <= maxdeg; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t p = n - k;
      const Bidegree src{p, k}, mid{n, 1}, top{n + 1, 1};
      const auto& basis = v.engine().group(p, k).group.basis();
      Verifier::Tracker vD(v, "dv o D = 0", src);
      Verifier::Tracker hD(v, "(dh + D) o D closed form", src);
      Verifier::Tracker Dv(v, "D o dv closed form", src);
      Verifier::Tracker Dh(v, "D o dh closed form", src);
      Verifier::Tracker four(v, "(dh + D) o D + D o dh + D o dv = 0", src);
      const auto mod = v.moduli(top);
      auto diff = [&](const Vector& a, const Vector& b) {
        Vector out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = abelian::mod(a[i] - b[i], mod[i]);
        return out;
      };
      for (std::size_t g = 0; g < basis.size(); ++g) {
        const Vector& b = basis[g];
        Vector d = v.apply(Piece::D, src, b);
        vD.zero(g, {n, 2}, v.apply(Piece::v, mid, d));
        Spread after_D, all;
        v.accumulate(after_D, top, v.apply(Piece::h, mid, d));
        v.accumulate(after_D, top, v.apply(Piece::D, mid, d));
        Vector dv = v.apply(Piece::D, {p, k + 1}, v.apply(Piece::v, src, b));
        Vector dh = v.apply(Piece::D, {p + 1, k}, v.apply(Piece::h, src, b));
        hD.zero(g, top, diff(after_D[top], closed.evaluate_all(W::partial_h_D, p, k, b)));
        Dv.zero(g, top, diff(dv, closed.evaluate_all(W::D_partial_v, p, k, b)));
        Dh.zero(g, top, diff(dh, closed.evaluate_all(W::D_partial_h, p, k, b)));
        all = after_D;
        v.accumulate(all, top, dv);
        v.accumulate(all, top, dh);
        four.zero(g, all);
      }
    }
  return report;
}

}  // namespace lcsext::cohomology
