#include "lcsext/cohomology/complex.hpp"

#include <stdexcept>
#include <string>

#include "engine.hpp"
#include "lcsext/errors.hpp"

namespace lcsext::cohomology {

namespace {

const char* piece_name(Piece p) {
  switch (p) {
    case Piece::h:
      return "dh";
    case Piece::v:
      return "dv";
    case Piece::D:
      return "D";
  }
  return "";
}

abelian::GroupHom piece_hom(const ComplexSetup& setup, Piece piece, std::size_t r, std::size_t s) {
  if (s == 0) throw std::invalid_argument("cochains need s >= 1");
  Engine engine(setup);
  auto [tr, ts] = Engine::target(piece, r, s);
  const abelian::Subgroup& src = engine.group(r, s).group;
  const abelian::Subgroup& dst = engine.group(tr, ts).group;
  try {
    return abelian::GroupHom(src, dst, engine.matrix(piece, r, s));
  } catch (const std::invalid_argument&) {
    throw ActionLawError(std::string(piece_name(piece)) + " on C^{" + std::to_string(r) + "," + std::to_string(s) +
                         "} leaves the normalized cochains");
  }
}

/// Rows of ambient coordinates of `sub` padded into a direct sum.
void append_padded(std::vector<abelian::Vector>& gens, const abelian::Subgroup& sub, std::size_t offset,
                   std::size_t width) {
  for (const abelian::Vector& b : sub.basis()) {
    abelian::Vector v(width, 0);
    std::copy(b.begin(), b.end(), v.begin() + offset);
    gens.push_back(std::move(v));
  }
}

}  // namespace

abelian::GroupHom diff_h(const ComplexSetup& setup, std::size_t r, std::size_t s) {
  return piece_hom(setup, Piece::h, r, s);
}

abelian::GroupHom diff_v(const ComplexSetup& setup, std::size_t r, std::size_t s) {
  return piece_hom(setup, Piece::v, r, s);
}

abelian::GroupHom diff_D(const ComplexSetup& setup, std::size_t r, std::size_t s) {
  return piece_hom(setup, Piece::D, r, s);
}

TotalComplex total_complex(const ComplexSetup& setup, std::size_t top) {
  if (top == 0) throw std::invalid_argument("total complex needs top degree >= 1");
  Engine engine(setup);
  const std::size_t k = engine.rank();
  TotalComplex tc;
  tc.top = top;
  tc.groups.resize(top + 2);
  tc.offsets.resize(top + 2);
  std::vector<abelian::FiniteAbelianGroup> ambients(top + 2);
  for (std::size_t n = 1; n <= top + 1; ++n) {
    std::vector<std::int64_t> orders;
    std::size_t width = 0;
    for (std::size_t r = 0; r < n; ++r) {
      tc.offsets[n].push_back(width);
      const CochainGroup& g = engine.group(r, n - r);
      width += g.ambient().rank();
      orders.insert(orders.end(), g.ambient().cyclic_orders().begin(), g.ambient().cyclic_orders().end());
    }
    ambients[n] = abelian::FiniteAbelianGroup(std::move(orders));
    std::vector<abelian::Vector> gens;
    for (std::size_t r = 0; r < n; ++r) append_padded(gens, engine.group(r, n - r).group, tc.offsets[n][r], width);
    tc.groups[n] = abelian::Subgroup::generated_by(ambients[n], std::move(gens));
  }

  tc.d.resize(top + 1);
  std::vector<Term> terms;
  const auto& mod = engine.moduli();
  for (std::size_t n = 1; n <= top; ++n) {
    abelian::SparseMatrix m = abelian::SparseMatrix::empty(ambients[n].rank());
    for (std::size_t tr = 0; tr <= n; ++tr) {
      const std::size_t ts = n + 1 - tr;
      const TupleCodec dst(setup.H.size(), n + 1);
      // Sources feeding C^{tr,ts}: dv from (tr, ts-1), dh from (tr-1, ts), D from every (r, n-r) when ts = 1.
      std::vector<std::pair<Piece, std::size_t>> sources;
      if (ts >= 2) sources.push_back({Piece::v, tr});
      if (tr >= 1) sources.push_back({Piece::h, tr - 1});
      if (ts == 1)
        for (std::size_t r = 0; r < n; ++r) sources.push_back({Piece::D, r});
      for (std::uint64_t t = 0; t < dst.count(); ++t) {
        const std::vector<Index> u = dst.decode(t);
        std::vector<std::vector<abelian::SparseMatrix::Entry>> rows(k);
        for (auto [piece, r] : sources) {
          terms.clear();
          engine.terms(piece, r, n - r, u, terms);
          const std::size_t base = tc.offsets[n][r];
          for (const Term& term : terms)
            for (std::size_t i = 0; i < k; ++i)
              for (std::size_t j = 0; j < k; ++j) {
                std::int64_t v = abelian::mod(term.sign * (*term.mat)[i * k + j], mod[i]);
                if (v != 0) rows[i].push_back({base + term.tuple * k + j, v});
              }
        }
        for (auto& row : rows) m.push_row(std::move(row));
      }
    }
    try {
      tc.d[n] = abelian::GroupHom(tc.groups[n], tc.groups[n + 1], m.reduced(ambients[n + 1].cyclic_orders()));
    } catch (const std::invalid_argument&) {
      throw ActionLawError("d^" + std::to_string(n) + " leaves the normalized cochains");
    }
  }
  return tc;
}

}  // namespace lcsext::cohomology
