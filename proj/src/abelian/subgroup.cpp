#include "lcsext/abelian/subgroup.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

#include "lcsext/abelian/smith.hpp"

namespace lcsext::abelian {

namespace {

struct Bezout {
  std::int64_t g, s, t;
};

// s*a + t*b = g = gcd(a, b) for a, b >= 0.
Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  Bezout b = extended_gcd(mod(a, m), m);
  if (b.g != 1) throw std::logic_error("inverse_mod: not a unit");
  return mod(b.s, m);
}

bool is_zero(const Vector& v) {
  for (std::int64_t x : v)
    if (x != 0) return false;
  return true;
}

void reduce_row(Vector& v, const std::vector<std::int64_t>& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i], moduli[i]);
}

// a*x + b*y, coordinatewise modulo moduli, starting at column `from`.
Vector combine(std::int64_t a, const Vector& x, std::int64_t b, const Vector& y,
               const std::vector<std::int64_t>& moduli, std::size_t from) {
  Vector out(x.size(), 0);
  for (std::size_t i = from; i < x.size(); ++i) {
    std::int64_t m = moduli[i];
    out[i] = mod(mul_mod(mod(a, m), x[i], m) + mul_mod(mod(b, m), y[i], m), m);
  }
  return out;
}

// Subtracts c * row from v (coordinates >= from).
void subtract_multiple(Vector& v, std::int64_t c, const Vector& row, const std::vector<std::int64_t>& moduli,
                       std::size_t from) {
  if (c == 0) return;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (row[i] == 0) continue;
    std::int64_t m = moduli[i];
    v[i] = mod(v[i] - mul_mod(mod(c, m), row[i], m), m);
  }
}

// Multiplier c with v[j] - c * pivot[j] = v[j] mod gcd(pivot[j], m).
std::int64_t reduction_multiplier(std::int64_t value, std::int64_t pivot, std::int64_t m) {
  std::int64_t g = std::gcd(pivot, m);
  std::int64_t target = value - value % g;
  if (target == 0) return 0;
  std::int64_t mg = m / g;
  return mul_mod(target / g, inverse_mod(pivot / g, mg), mg);
}

}  // namespace

EchelonSplit howell_split(std::vector<Vector> rows, const std::vector<std::int64_t>& moduli, std::size_t split) {
  const std::size_t width = moduli.size();
  if (split > width) throw std::invalid_argument("howell_split: split beyond width");
  std::vector<Vector> pool;
  pool.reserve(rows.size());
  for (Vector& r : rows) {
    if (r.size() != width) throw std::invalid_argument("howell_split: row width mismatch");
    reduce_row(r, moduli);
    if (!is_zero(r)) pool.push_back(std::move(r));
  }

  EchelonSplit out;
  for (std::size_t j = 0; j < split; ++j) {
    const std::int64_t m = moduli[j];
    if (m == 1) continue;
    std::size_t p = 0;
    while (p < pool.size() && pool[p][j] == 0) ++p;
    if (p == pool.size()) continue;
    Vector pivot = std::move(pool[p]);
    pool[p] = std::move(pool.back());
    pool.pop_back();

    std::size_t keep = 0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      Vector& r = pool[k];
      if (r[j] != 0) {
        std::int64_t a = pivot[j], b = r[j];
        Bezout bz = extended_gcd(a, b);
        Vector new_pivot = combine(bz.s, pivot, bz.t, r, moduli, j);
        Vector rest = combine(b / bz.g, pivot, -(a / bz.g), r, moduli, j);
        pivot = std::move(new_pivot);
        r = std::move(rest);
        if (is_zero(r)) continue;
      }
      if (keep != k) pool[keep] = std::move(r);
      ++keep;
    }
    pool.resize(keep);

    std::int64_t g = std::gcd(pivot[j], m);
    Vector extra = combine(m / g, pivot, 0, pivot, moduli, j);
    if (!is_zero(extra)) pool.push_back(std::move(extra));
    out.pivot_rows.push_back(std::move(pivot));
    out.pivots.push_back(j);
  }
  out.tail_rows = std::move(pool);
  return out;
}

Subgroup Subgroup::whole(const FiniteAbelianGroup& ambient) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.generator(i).coordinates);
  return generated_by(ambient, std::move(gens));
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& ambient) {
  Subgroup s;
  s.ambient_ = ambient;
  return s;
}

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& ambient, std::vector<Vector> generators) {
  EchelonSplit e = howell_split(std::move(generators), ambient.cyclic_orders(), ambient.rank());
  Subgroup s;
  s.ambient_ = ambient;
  s.rows_ = std::move(e.pivot_rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

BigInt Subgroup::order() const {
  BigInt n = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::int64_t m = ambient_.cyclic_order(pivots_[k]);
    n *= m / std::gcd(rows_[k][pivots_[k]], m);
  }
  return n;
}

Vector Subgroup::reduce(const Vector& x) const {
  const auto& moduli = ambient_.cyclic_orders();
  if (x.size() != moduli.size()) throw std::invalid_argument("Subgroup::reduce: width mismatch");
  Vector v = x;
  reduce_row(v, moduli);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t j = pivots_[k];
    std::int64_t c = reduction_multiplier(v[j], rows_[k][j], moduli[j]);
    subtract_multiple(v, c, rows_[k], moduli, j);
  }
  return v;
}

std::optional<std::vector<std::int64_t>> Subgroup::coefficients(const Vector& x) const {
  const auto& moduli = ambient_.cyclic_orders();
  if (x.size() != moduli.size()) throw std::invalid_argument("Subgroup::coefficients: width mismatch");
  Vector v = x;
  reduce_row(v, moduli);
  std::vector<std::int64_t> c(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t j = pivots_[k];
    c[k] = reduction_multiplier(v[j], rows_[k][j], moduli[j]);
    subtract_multiple(v, c[k], rows_[k], moduli, j);
  }
  if (!is_zero(v)) return std::nullopt;
  return c;
}

bool Subgroup::contains(const Vector& x) const { return is_zero(reduce(x)); }

bool Subgroup::contains(const Subgroup& other) const {
  if (!(other.ambient_ == ambient_)) return false;
  for (const Vector& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<std::int64_t> Subgroup::basis_orders() const {
  std::vector<std::int64_t> out;
  for (const Vector& r : rows_) {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t m = ambient_.cyclic_order(i);
      o = std::lcm(o, m / std::gcd(r[i], m));
    }
    out.push_back(o);
  }
  return out;
}

std::vector<BigInt> Subgroup::invariant_factors() const { return quotient_invariants(*this, trivial(ambient_)); }

std::vector<BigInt> quotient_invariants(const Subgroup& G, const Subgroup& S) {
  if (!G.contains(S)) throw std::invalid_argument("quotient_invariants: subgroup not contained");
  const std::size_t width = G.ambient().rank();
  const std::size_t t = G.basis().size();
  std::vector<std::int64_t> orders = G.basis_orders();

  // Rows (p_k | e_k) and (s | 0); rows with vanishing left part are relations of G / S.
  std::vector<std::int64_t> moduli = G.ambient().cyclic_orders();
  moduli.insert(moduli.end(), orders.begin(), orders.end());
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < t; ++k) {
    Vector r(width + t, 0);
    std::copy(G.basis()[k].begin(), G.basis()[k].end(), r.begin());
    r[width + k] = 1;
    rows.push_back(std::move(r));
  }
  for (const Vector& s : S.basis()) {
    Vector r(width + t, 0);
    std::copy(s.begin(), s.end(), r.begin());
    rows.push_back(std::move(r));
  }
  EchelonSplit e = howell_split(std::move(rows), moduli, width);

  std::vector<Vector> relations;
  for (Vector& r : e.tail_rows) relations.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(width), r.end());
  EchelonSplit rel = howell_split(std::move(relations), orders, t);

  IntMatrix M(t, rel.pivot_rows.size() + t);
  for (std::size_t c = 0; c < rel.pivot_rows.size(); ++c)
    for (std::size_t k = 0; k < t; ++k) M(k, c) = rel.pivot_rows[c][k];
  for (std::size_t k = 0; k < t; ++k) M(k, rel.pivot_rows.size() + k) = orders[k];
  return cokernel_invariants(M);
}

}  // namespace lcsext::abelian
