#include "lcsext/cohomology/cochains.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "lcsext/abelian/hom.hpp"
#include "lcsext/errors.hpp"
#include "shuffles.hpp"

namespace lcsext::cohomology {

const std::vector<std::vector<Shuffle>>& shuffles(std::size_t s) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<Shuffle>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<Shuffle>> out(s);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    const auto l = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (l == 0 || l == s) continue;
    Shuffle sh{std::vector<std::size_t>(s), 1};
    std::size_t first = 0, rest = l, inversions = 0;
    for (std::size_t p = 0; p < s; ++p) {
      if (mask >> p & 1) {
        inversions += p - first;
        sh.position[first++] = p;
      } else {
        sh.position[rest++] = p;
      }
    }
    sh.sign = inversions % 2 ? -1 : 1;
    out[l].push_back(std::move(sh));
  }
  return cache.emplace(s, std::move(out)).first->second;
}

ComplexSetup make_setup(LinearCycleSet H, abelian::FiniteAbelianGroup I, Table diamond, Table yleft,
                        SignConvention sign, std::uint64_t max_tuples) {
  const std::size_t nh = H.size();
  const std::uint64_t ni = I.size();
  auto shape = [](const Table& t, std::size_t rows, std::size_t cols, std::uint64_t bound) {
    if (t.size() != rows) return false;
    for (const auto& row : t) {
      if (row.size() != cols) return false;
      for (Index v : row)
        if (v >= bound) return false;
    }
    return true;
  };
  if (!shape(diamond, nh, ni, ni)) throw std::invalid_argument("diamond table must be |H| x |I| with entries in I");
  if (!shape(yleft, ni, nh, ni)) throw std::invalid_argument("yleft table must be |I| x |H| with entries in I");
  if (max_tuples == 0) throw std::invalid_argument("tuple limit must be positive");
  return {std::move(H), std::move(I), std::move(diamond), std::move(yleft), sign, max_tuples};
}

ComplexSetup make_setup(const LinearCycleSet& H, const abelian::FiniteAbelianGroup& I,
                        const extension::ActionPair& actions, SignConvention sign, std::uint64_t max_tuples) {
  return make_setup(H, I, actions.diamond, actions.yleft, sign, max_tuples);
}

ComplexSetup trivial_setup(const LinearCycleSet& H, const abelian::FiniteAbelianGroup& I) {
  const std::size_t ni = I.size();
  Table diamond(H.size(), std::vector<Index>(ni));
  for (auto& row : diamond)
    for (Index y = 0; y < ni; ++y) row[y] = y;
  return make_setup(H, I, diamond, extension::constant_table(ni, H.size()));
}

TupleCodec::TupleCodec(std::size_t h_order, std::size_t length)
    : base_(h_order == 0 ? 0 : h_order - 1), length_(length), count_(1) {
  for (std::size_t i = 0; i < length; ++i) count_ *= base_;
}

std::uint64_t TupleCodec::encode(const std::vector<Index>& tuple) const {
  std::uint64_t t = 0;
  for (Index h : tuple) t = t * base_ + (h - 1);
  return t;
}

std::vector<Index> TupleCodec::decode(std::uint64_t index) const {
  std::vector<Index> out(length_);
  for (std::size_t p = length_; p-- > 0;) {
    out[p] = static_cast<Index>(index % base_ + 1);
    index /= base_;
  }
  return out;
}

std::uint64_t tuple_count(const ComplexSetup& setup, std::size_t n) {
  const std::uint64_t base = setup.H.size() - 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= base;
    if (count > setup.max_tuples)
      throw GuardError("cochains on " + std::to_string(n) + "-tuples exceed the tuple limit " +
                       std::to_string(setup.max_tuples));
  }
  return count;
}

abelian::FiniteAbelianGroup function_group(const abelian::FiniteAbelianGroup& I, std::uint64_t tuples) {
  std::vector<std::int64_t> orders;
  orders.reserve(tuples * I.rank());
  for (std::uint64_t t = 0; t < tuples; ++t)
    orders.insert(orders.end(), I.cyclic_orders().begin(), I.cyclic_orders().end());
  return abelian::FiniteAbelianGroup(std::move(orders));
}

abelian::SparseMatrix shuffle_relations(const ComplexSetup& setup, std::size_t r, std::size_t s) {
  if (s == 0) throw std::invalid_argument("cochains need s >= 1");
  const std::size_t k = setup.I.rank();
  const TupleCodec codec(setup.H.size(), r + s);
  tuple_count(setup, r + s);
  abelian::SparseMatrix m = abelian::SparseMatrix::empty(codec.count() * k);
  const auto& table = shuffles(s);
  std::vector<Index> permuted(r + s);
  for (std::uint64_t t = 0; t < codec.count(); ++t) {
    const std::vector<Index> h = codec.decode(t);
    for (std::size_t l = 1; l < s; ++l)
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<abelian::SparseMatrix::Entry> row;
        for (const Shuffle& sh : table[l]) {
          std::copy(h.begin(), h.begin() + r, permuted.begin());
          for (std::size_t p = 0; p < s; ++p) permuted[r + sh.position[p]] = h[r + p];
          row.push_back({codec.encode(permuted) * k + i, sh.sign});
        }
        m.push_row(std::move(row));
      }
  }
  return m;
}

CochainGroup cochain_group(const ComplexSetup& setup, std::size_t r, std::size_t s) {
  if (s == 0) throw std::invalid_argument("cochains need s >= 1");
  const std::uint64_t tuples = tuple_count(setup, r + s);
  abelian::FiniteAbelianGroup ambient = function_group(setup.I, tuples);
  if (s == 1 || tuples == 0) return {r, s, tuples, abelian::Subgroup::whole(ambient)};
  abelian::SparseMatrix rel = shuffle_relations(setup, r, s);
  abelian::FiniteAbelianGroup target = function_group(setup.I, tuples * (s - 1));
  abelian::GroupHom hom = abelian::unchecked_hom(abelian::Subgroup::whole(ambient), abelian::Subgroup::whole(target),
                                                 std::move(rel));
  return {r, s, tuples, abelian::kernel_subgroup(hom)};
}

Index evaluate(const ComplexSetup& setup, const abelian::Vector& cochain, const std::vector<Index>& tuple) {
  for (Index h : tuple)
    if (h == 0) return 0;
  const std::size_t k = setup.I.rank();
  const TupleCodec codec(setup.H.size(), tuple.size());
  const std::uint64_t t = codec.encode(tuple);
  std::vector<std::int64_t> coords(cochain.begin() + t * k, cochain.begin() + (t + 1) * k);
  return static_cast<Index>(setup.I.index_of(setup.I.element(coords)));
}

}  // namespace lcsext::cohomology
