#include "engine.hpp"

#include <string>

#include "lcsext/errors.hpp"

namespace lcsext::cohomology {

namespace {

std::vector<std::int64_t> coords(const abelian::FiniteAbelianGroup& I, Index y) {
  return I.element_at(y).coordinates;
}

}  // namespace

Engine::Engine(const ComplexSetup& setup) : setup_(setup), k_(setup.I.rank()) {
  const auto& I = setup.I;
  const auto& H = setup.H;
  const std::size_t ni = I.size(), nh = H.size();
  identity_.assign(k_ * k_, 0);
  for (std::size_t i = 0; i < k_; ++i) identity_[i * k_ + i] = 1;
  std::vector<Index> gens(k_);
  for (std::size_t j = 0; j < k_; ++j) gens[j] = static_cast<Index>(I.index_of(I.generator(j)));

  auto build = [&](auto image, const std::string& what, Index h) {
    Mat m(k_ * k_);
    for (std::size_t j = 0; j < k_; ++j) {
      auto c = coords(I, image(gens[j]));
      for (std::size_t i = 0; i < k_; ++i) m[i * k_ + j] = c[i];
    }
    for (Index y = 0; y < ni; ++y)
      if (apply(m, coords(I, y)) != coords(I, image(y)))
        throw ActionLawError(what + " is not additive in y at h = " + std::to_string(h) + ", y = " +
                             std::to_string(y));
    return m;
  };
  for (Index h = 0; h < nh; ++h) {
    diamond_.push_back(build([&](Index y) { return setup.diamond[h][y]; }, "h<>y", h));
    yleft_.push_back(build([&](Index y) { return setup.yleft[y][h]; }, "y<|h", h));
  }
  yleft_diamond_.assign(nh, std::vector<Mat>(nh));
  for (Index a = 0; a < nh; ++a)
    for (Index b = 0; b < nh; ++b) yleft_diamond_[a][b] = product(yleft_[a], diamond_[b]);
}

std::vector<std::int64_t> Engine::apply(const Mat& m, const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> out(k_, 0);
  const auto& mod = moduli();
  for (std::size_t i = 0; i < k_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k_; ++j) acc = abelian::mod(acc + abelian::mul_mod(m[i * k_ + j], x[j], mod[i]), mod[i]);
    out[i] = acc;
  }
  return out;
}

Mat Engine::product(const Mat& a, const Mat& b) const {
  Mat out(k_ * k_, 0);
  const auto& mod = moduli();
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < k_; ++l)
        acc = abelian::mod(acc + abelian::mul_mod(a[i * k_ + l], b[l * k_ + j], mod[i]), mod[i]);
      out[i * k_ + j] = acc;
    }
  return out;
}

std::pair<std::size_t, std::size_t> Engine::target(Piece piece, std::size_t r, std::size_t s) {
  switch (piece) {
    case Piece::h:
      return {r + 1, s};
    case Piece::v:
      return {r, s + 1};
    case Piece::D:
      return {r + s, 1};
  }
  return {};
}

void Engine::terms(Piece piece, std::size_t r, std::size_t s, const std::vector<Index>& u,
                   std::vector<Term>& out) const {
  const auto& H = setup_.H;
  const TupleCodec codec(H.size(), r + s);
  const bool corollary = setup_.sign == SignConvention::corollary;
  std::vector<Index> w;
  auto push = [&](std::int64_t sign, const Mat* m) {
    for (Index h : w)
      if (h == 0) return;
    out.push_back({codec.encode(w), sign, m});
  };
  auto merged = [&](std::size_t j) {  // merge slots j, j+1 (0-based)
    w.assign(u.begin(), u.begin() + j);
    w.push_back(H.add(u[j], u[j + 1]));
    w.insert(w.end(), u.begin() + j + 2, u.end());
  };
  auto dropped = [&](std::size_t j) {
    w.assign(u.begin(), u.begin() + j);
    w.insert(w.end(), u.begin() + j + 1, u.end());
  };
  auto sum = [&](std::size_t from, std::size_t to) {
    Index acc = 0;
    for (std::size_t p = from; p < to; ++p) acc = H.add(acc, u[p]);
    return acc;
  };
  auto alt = [](std::size_t e) -> std::int64_t { return e % 2 ? -1 : 1; };

  switch (piece) {
    case Piece::h: {
      w.clear();
      for (std::size_t p = 1; p < u.size(); ++p) w.push_back(H.dot(u[0], u[p]));
      push(1, &identity_);
      for (std::size_t j = 1; j <= r; ++j) {
        merged(j - 1);
        push(alt(j), &identity_);
      }
      const Index R = H.dot(sum(0, r), u[r]);
      dropped(r);
      push(alt(r + 1), &diamond_[R]);
      break;
    }
    case Piece::v: {
      const std::int64_t c = corollary ? -1 : 1;
      dropped(r);
      push(c * alt(r), &identity_);
      for (std::size_t j = r + 1; j <= r + s; ++j) {
        merged(j - 1);
        push(c * alt(j), &identity_);
      }
      dropped(r + s);
      push(c * alt(r + s + 1), &identity_);
      break;
    }
    case Piece::D: {
      const Index R = H.dot(sum(0, r), sum(r, r + s));
      const Index R1 = H.dot(sum(0, r + s), u[r + s]);
      dropped(r + s);
      push(corollary ? alt(r + 1) : alt(r + s), &yleft_diamond_[R1][R]);
      break;
    }
  }
}

abelian::SparseMatrix Engine::matrix(Piece piece, std::size_t r, std::size_t s) const {
  auto [tr, ts] = target(piece, r, s);
  const TupleCodec src(setup_.H.size(), r + s), dst(setup_.H.size(), tr + ts);
  tuple_count(setup_, tr + ts);
  abelian::SparseMatrix m = abelian::SparseMatrix::empty(src.count() * k_);
  std::vector<Term> ts_terms;
  const auto& mod = moduli();
  for (std::uint64_t t = 0; t < dst.count(); ++t) {
    const std::vector<Index> u = dst.decode(t);
    ts_terms.clear();
    terms(piece, r, s, u, ts_terms);
    for (std::size_t i = 0; i < k_; ++i) {
      std::vector<abelian::SparseMatrix::Entry> row;
      for (const Term& term : ts_terms)
        for (std::size_t j = 0; j < k_; ++j) {
          std::int64_t v = abelian::mod(term.sign * (*term.mat)[i * k_ + j], mod[i]);
          if (v != 0) row.push_back({term.tuple * k_ + j, v});
        }
      m.push_row(std::move(row));
    }
  }
  return m.reduced(function_group(setup_.I, dst.count()).cyclic_orders());
}

const CochainGroup& Engine::group(std::size_t r, std::size_t s) {
  auto key = std::make_pair(r, s);
  auto it = groups_.find(key);
  if (it == groups_.end()) it = groups_.emplace(key, cochain_group(setup_, r, s)).first;
  return it->second;
}

}  // namespace lcsext::cohomology
