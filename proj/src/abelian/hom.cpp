#include "lcsext/abelian/hom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcsext::abelian {

namespace {

std::int64_t reduce128(__int128 v, std::int64_t m) {
  __int128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

void normalize_entries(std::vector<SparseMatrix::Entry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t col = entries[i].col;
    std::int64_t sum = 0;
    for (; i < entries.size() && entries[i].col == col; ++i) sum += entries[i].value;
    if (sum != 0) entries[out++] = {col, sum};
  }
  entries.resize(out);
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), offsets_(rows + 1, 0) {}

SparseMatrix SparseMatrix::empty(std::size_t cols) { return SparseMatrix(0, cols); }

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m = empty(n);
  for (std::size_t i = 0; i < n; ++i) m.push_row({{i, 1}});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  SparseMatrix m = empty(cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::vector<Entry> e;
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c] != 0) e.push_back({c, r[c]});
    m.push_row(std::move(e));
  }
  return m;
}

void SparseMatrix::push_row(std::vector<Entry> entries) {
  for (const Entry& e : entries)
    if (e.col >= cols_) throw std::out_of_range("sparse entry column");
  normalize_entries(entries);
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  offsets_.push_back(entries_.size());
}

std::span<const SparseMatrix::Entry> SparseMatrix::row(std::size_t r) const {
  return {entries_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
}

SparseMatrix SparseMatrix::reduced(const std::vector<std::int64_t>& row_moduli) const {
  if (row_moduli.size() != rows()) throw std::invalid_argument("row moduli size mismatch");
  SparseMatrix out = empty(cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    std::vector<Entry> e;
    for (const Entry& x : row(r)) {
      std::int64_t v = mod(x.value, row_moduli[r]);
      if (v != 0) e.push_back({x.col, v});
    }
    out.push_row(std::move(e));
  }
  return out;
}

Vector SparseMatrix::apply(const Vector& x, const std::vector<std::int64_t>& row_moduli) const {
  if (x.size() != cols_) throw std::invalid_argument("vector size mismatch");
  Vector out(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    __int128 acc = 0;
    for (const Entry& e : row(r)) acc += static_cast<__int128>(e.value) * x[e.col];
    out[r] = reduce128(acc, row_moduli[r]);
  }
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs, const std::vector<std::int64_t>& row_moduli) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("matrix dimension mismatch");
  SparseMatrix out = empty(rhs.cols());
  std::vector<__int128> acc(rhs.cols(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const Entry& a : row(r))
      for (const Entry& b : rhs.row(a.col)) {
        if (acc[b.col] == 0) touched.push_back(b.col);
        acc[b.col] += static_cast<__int128>(a.value) * b.value;
      }
    std::vector<Entry> e;
    for (std::size_t c : touched) {
      std::int64_t v = reduce128(acc[c], row_moduli[r]);
      acc[c] = 0;
      if (v != 0) e.push_back({c, v});
    }
    touched.clear();
    out.push_row(std::move(e));
  }
  return out;
}

SparseMatrix SparseMatrix::add(const SparseMatrix& rhs, const std::vector<std::int64_t>& row_moduli) const {
  if (rows() != rhs.rows() || cols_ != rhs.cols_) throw std::invalid_argument("matrix dimension mismatch");
  SparseMatrix out = empty(cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    std::vector<Entry> e(row(r).begin(), row(r).end());
    e.insert(e.end(), rhs.row(r).begin(), rhs.row(r).end());
    for (Entry& x : e) x.value = mod(x.value, row_moduli[r]);
    normalize_entries(e);
    for (Entry& x : e) x.value = mod(x.value, row_moduli[r]);
    std::erase_if(e, [](const Entry& x) { return x.value == 0; });
    out.push_row(std::move(e));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows(), std::vector<std::int64_t>(cols_, 0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const Entry& e : row(r)) out[r][e.col] = e.value;
  return out;
}

GroupHom::GroupHom(Subgroup domain, Subgroup codomain, SparseMatrix matrix, Unchecked)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.ambient().rank() || matrix_.cols() != domain_.ambient().rank())
    throw std::invalid_argument("hom matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", expected " +
                                std::to_string(codomain_.ambient().rank()) + "x" +
                                std::to_string(domain_.ambient().rank()));
  matrix_ = matrix_.reduced(codomain_.ambient().cyclic_orders());
}

GroupHom::GroupHom(Subgroup domain, Subgroup codomain, SparseMatrix matrix)
    : GroupHom(std::move(domain), std::move(codomain), std::move(matrix), Unchecked{}) {
  const auto& src = domain_.ambient().cyclic_orders();
  const auto& dst = codomain_.ambient().cyclic_orders();
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (const auto& e : matrix_.row(r))
      if (mul_mod(src[e.col], e.value, dst[r]) != 0)
        throw std::invalid_argument("hom matrix does not respect relation of domain generator " +
                                    std::to_string(e.col));
  for (const Vector& b : domain_.basis())
    if (!codomain_.contains(apply(b))) throw std::invalid_argument("hom maps a domain generator outside the codomain");
}

GroupHom unchecked_hom(Subgroup domain, Subgroup codomain, SparseMatrix matrix) {
  return GroupHom(std::move(domain), std::move(codomain), std::move(matrix), GroupHom::Unchecked{});
}

GroupHom GroupHom::identity(const Subgroup& g) {
  return GroupHom(g, g, SparseMatrix::identity(g.ambient().rank()));
}

GroupHom GroupHom::zero(const Subgroup& domain, const Subgroup& codomain) {
  return GroupHom(domain, codomain, SparseMatrix(codomain.ambient().rank(), domain.ambient().rank()));
}

GroupHom GroupHom::multiplication(const Subgroup& g, std::int64_t k) {
  SparseMatrix m = SparseMatrix::empty(g.ambient().rank());
  for (std::size_t i = 0; i < g.ambient().rank(); ++i) m.push_row({{i, k}});
  return GroupHom(g, g, std::move(m));
}

Vector GroupHom::apply(const Vector& x) const { return matrix_.apply(x, codomain_.ambient().cyclic_orders()); }

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (!domain_.ambient().contains(x) || !domain_.contains(x.coordinates))
    throw std::invalid_argument("element outside the hom domain");
  return {apply(x.coordinates)};
}

GroupHom GroupHom::compose(const GroupHom& first) const {
  if (!(first.codomain_.ambient() == domain_.ambient())) throw std::invalid_argument("compose: ambient mismatch");
  if (!domain_.contains(first.codomain_)) {
    for (const Vector& b : first.domain_.basis())
      if (!domain_.contains(first.apply(b))) throw std::invalid_argument("compose: image not in domain");
  }
  return unchecked_hom(first.domain_, codomain_, matrix_.multiply(first.matrix_, codomain_.ambient().cyclic_orders()));
}

namespace {

// Rows (M b | b) for the domain generators b, eliminated over the codomain columns.
EchelonSplit graph_split(const GroupHom& h) {
  const FiniteAbelianGroup& src = h.domain().ambient();
  const FiniteAbelianGroup& dst = h.codomain().ambient();
  std::vector<std::int64_t> moduli = dst.cyclic_orders();
  moduli.insert(moduli.end(), src.cyclic_orders().begin(), src.cyclic_orders().end());
  std::vector<Vector> rows;
  for (const Vector& b : h.domain().basis()) {
    Vector r = h.apply(b);
    r.insert(r.end(), b.begin(), b.end());
    rows.push_back(std::move(r));
  }
  return howell_split(std::move(rows), moduli, dst.rank());
}

Vector right_part(const Vector& row, std::size_t offset) {
  return Vector(row.begin() + static_cast<std::ptrdiff_t>(offset), row.end());
}

}  // namespace

Subgroup kernel_subgroup(const GroupHom& h) {
  EchelonSplit e = graph_split(h);
  std::vector<Vector> gens;
  for (const Vector& r : e.tail_rows) gens.push_back(right_part(r, h.codomain().ambient().rank()));
  return Subgroup::generated_by(h.domain().ambient(), std::move(gens));
}

Subgroup image_subgroup(const GroupHom& h) {
  std::vector<Vector> gens;
  for (const Vector& b : h.domain().basis()) gens.push_back(h.apply(b));
  return Subgroup::generated_by(h.codomain().ambient(), std::move(gens));
}

SubgroupWithInclusion hom_kernel(const GroupHom& h) {
  Subgroup k = kernel_subgroup(h);
  GroupHom inc = unchecked_hom(k, h.domain(), SparseMatrix::identity(h.domain().ambient().rank()));
  return {std::move(k), std::move(inc)};
}

SubgroupWithInclusion hom_image(const GroupHom& h) {
  Subgroup im = image_subgroup(h);
  GroupHom inc = unchecked_hom(im, h.codomain(), SparseMatrix::identity(h.codomain().ambient().rank()));
  return {std::move(im), std::move(inc)};
}

std::vector<BigInt> quotient_invariants(const Subgroup& G, const GroupHom& inclusion) {
  if (!(inclusion.codomain().ambient() == G.ambient()))
    throw std::invalid_argument("quotient_invariants: inclusion does not land in the ambient of G");
  Subgroup im = image_subgroup(inclusion);
  if (!G.contains(im)) throw std::invalid_argument("quotient_invariants: subgroup not contained in G");
  if (!kernel_subgroup(inclusion).is_trivial())
    throw std::invalid_argument("quotient_invariants: structure map is not injective");
  return quotient_invariants(G, im);
}

std::optional<Vector> preimage(const GroupHom& h, const Vector& y) {
  const FiniteAbelianGroup& dst = h.codomain().ambient();
  const FiniteAbelianGroup& src = h.domain().ambient();
  if (y.size() != dst.rank()) throw std::invalid_argument("preimage: target width mismatch");
  const std::size_t split = dst.rank();
  std::vector<std::int64_t> moduli = dst.cyclic_orders();
  moduli.insert(moduli.end(), src.cyclic_orders().begin(), src.cyclic_orders().end());

  EchelonSplit e = graph_split(h);
  Vector v(split + src.rank(), 0);
  for (std::size_t i = 0; i < split; ++i) v[i] = mod(y[i], moduli[i]);

  std::size_t k = 0;
  for (std::size_t j = 0; j < split; ++j) {
    const std::int64_t m = moduli[j];
    if (k < e.pivots.size() && e.pivots[k] == j) {
      const Vector& row = e.pivot_rows[k++];
      std::int64_t g = std::gcd(row[j], m);
      if (v[j] % g != 0) return std::nullopt;
      // Solve c * row[j] = v[j] modulo m.
      Subgroup cyclic = Subgroup::generated_by(FiniteAbelianGroup({m}), {{row[j]}});
      auto c = cyclic.coefficients({v[j]});
      if (!c) return std::nullopt;
      for (std::size_t i = j; i < v.size(); ++i)
        v[i] = mod(v[i] - mul_mod(mod((*c)[0], moduli[i]), row[i], moduli[i]), moduli[i]);
    }
    if (v[j] != 0) return std::nullopt;
  }
  Vector x = right_part(v, split);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(-x[i], src.cyclic_order(i));

  std::vector<Vector> kgens;
  for (const Vector& r : e.tail_rows) kgens.push_back(right_part(r, split));
  return Subgroup::generated_by(src, std::move(kgens)).reduce(x);
}

}  // namespace lcsext::abelian
