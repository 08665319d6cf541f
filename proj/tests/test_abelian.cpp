#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "lcsext/abelian/group.hpp"
#include "lcsext/abelian/hom.hpp"
#include "lcsext/abelian/smith.hpp"

using namespace lcsext::abelian;

namespace {

std::vector<std::int64_t> to_i64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const BigInt& b : v) out.push_back(static_cast<std::int64_t>(b));
  return out;
}

std::vector<GroupElement> elements(const FiniteAbelianGroup& g) {
  std::vector<GroupElement> out;
  for (std::uint64_t i = 0; i < g.size(); ++i) out.push_back(g.element_at(i));
  return out;
}

// Counts |{x : kx = 0}| for every k up to the exponent bound; determines the group up to isomorphism.
std::vector<std::uint64_t> torsion_profile(const std::vector<std::int64_t>& factors, std::int64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::int64_t k = 1; k <= bound; ++k) {
    std::uint64_t n = 1;
    for (std::int64_t d : factors) n *= static_cast<std::uint64_t>(std::gcd(k, d));
    out.push_back(n);
  }
  return out;
}

Vector brute_apply(const std::vector<std::vector<std::int64_t>>& M, const FiniteAbelianGroup& dst, const Vector& x) {
  Vector y(M.size(), 0);
  for (std::size_t r = 0; r < M.size(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += M[r][c] * x[c];
    y[r] = mod(acc, dst.cyclic_order(r));
  }
  return y;
}

// Random matrix respecting relations: entry (r,c) is a multiple of dst_r / gcd(src_c, dst_r).
std::vector<std::vector<std::int64_t>> random_hom_matrix(const FiniteAbelianGroup& src, const FiniteAbelianGroup& dst,
                                                         std::mt19937& rng) {
  std::vector<std::vector<std::int64_t>> M(dst.rank(), std::vector<std::int64_t>(src.rank(), 0));
  for (std::size_t r = 0; r < dst.rank(); ++r)
    for (std::size_t c = 0; c < src.rank(); ++c) {
      std::int64_t step = dst.cyclic_order(r) / std::gcd(src.cyclic_order(c), dst.cyclic_order(r));
      M[r][c] = step * std::uniform_int_distribution<std::int64_t>(0, dst.cyclic_order(r))(rng);
    }
  return M;
}

FiniteAbelianGroup random_group(std::mt19937& rng, int max_rank, std::int64_t max_order) {
  int rank = std::uniform_int_distribution<int>(0, max_rank)(rng);
  std::vector<std::int64_t> orders;
  for (int i = 0; i < rank; ++i) orders.push_back(std::uniform_int_distribution<std::int64_t>(1, max_order)(rng));
  return FiniteAbelianGroup(orders);
}

}  // namespace

TEST_CASE("group construction and encoding") {
  CHECK(group_from_orders({2, 4}).size() == 8);
  CHECK(group_from_orders({}).size() == 1);
  auto z3 = group_from_orders({3});
  CHECK(z3.element_at(2).coordinates == Vector{2});
  CHECK_THROWS_AS(group_from_orders({0}), std::invalid_argument);
  CHECK_THROWS_AS(group_from_orders({2, -1}), std::invalid_argument);

  auto g = group_from_orders({2, 4});
  CHECK(g.add(g.element(Vector{1, 3}), g.element(Vector{1, 2})).coordinates == Vector{0, 1});
  CHECK(g.index_of(g.element(Vector{1, 0})) == 4);
  CHECK(g.element_at(5).coordinates == Vector{1, 1});
  CHECK_THROWS_AS(g.add(GroupElement{{2, 0}}, g.zero()), std::invalid_argument);

  for (const auto& x : elements(g)) {
    CHECK(g.add(x, g.zero()) == x);
    CHECK(g.add(x, g.neg(x)) == g.zero());
    CHECK(g.element_at(g.index_of(x)) == x);
    for (const auto& y : elements(g)) CHECK(g.add(x, y) == g.add(y, x));
  }
  CHECK(g.cyclic_orders() == std::vector<std::int64_t>{2, 4});
  CHECK(to_i64(group_from_orders({6, 4}).invariant_factors()) == std::vector<std::int64_t>{2, 12});
  CHECK(group_from_orders({1, 1}).invariant_factors().empty());
}

TEST_CASE("smith normal form") {
  auto check_decomposition = [](const IntMatrix& M) {
    SmithDecomposition d = smith_normal_form(M);
    CHECK(d.U * M * d.V == d.S);
    std::size_t n = std::min(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (i != j) CHECK(d.S(i, j) == 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(d.S(i, i) >= 0);
      if (d.S(i, i) != 0) CHECK(d.S(i + 1, i + 1) % d.S(i, i) == 0);
      else CHECK(d.S(i + 1, i + 1) == 0);
    }
    return d;
  };

  auto id = check_decomposition(IntMatrix::identity(3));
  CHECK(id.S == IntMatrix::identity(3));
  CHECK(id.U == IntMatrix::identity(3));
  auto zero = check_decomposition(IntMatrix(2, 3));
  CHECK(zero.S == IntMatrix(2, 3));
  CHECK(zero.V == IntMatrix::identity(3));

  // gcd of entries is 2, |det| = 8, so the diagonal is (2, 4).
  auto d = check_decomposition(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(d.S(0, 0) == 2);
  CHECK(d.S(1, 1) == 4);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = rng() % 5 + 1, c = rng() % 5 + 1;
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) M(i, j) = static_cast<int>(rng() % 41) - 20;
    check_decomposition(M);
  }
}

TEST_CASE("multiplication by two on Z/4") {
  auto z4 = Subgroup::whole(group_from_orders({4}));
  GroupHom two = GroupHom::multiplication(z4, 2);
  auto [k, kinc] = hom_kernel(two);
  CHECK(k.order() == 2);
  CHECK(k.contains(Vector{2}));
  auto [im, iminc] = hom_image(two);
  CHECK(im.order() == 2);
  CHECK(to_i64(quotient_invariants(z4, kinc)) == std::vector<std::int64_t>{2});
  CHECK(preimage(two, {2}) == Vector{1});
  CHECK_FALSE(preimage(two, {1}).has_value());
}

TEST_CASE("identity and zero maps") {
  auto G = Subgroup::whole(group_from_orders({2, 6, 4}));
  auto id = GroupHom::identity(G);
  auto zero = GroupHom::zero(G, G);
  CHECK(hom_kernel(id).group.is_trivial());
  CHECK(hom_kernel(zero).group == G);
  CHECK(hom_image(zero).group.is_trivial());
  CHECK(hom_image(id).group == G);
  CHECK(quotient_invariants(G, hom_image(id).inclusion).empty());
  CHECK(to_i64(quotient_invariants(G, hom_kernel(id).inclusion)) == std::vector<std::int64_t>{2, 2, 12});
  CHECK(preimage(id, {1, 5, 3}) == Vector{1, 5, 3});
  CHECK_FALSE(preimage(zero, {1, 0, 0}).has_value());
}

TEST_CASE("hom construction rejects ill-defined matrices") {
  auto z2 = Subgroup::whole(group_from_orders({2}));
  auto z4 = Subgroup::whole(group_from_orders({4}));
  CHECK_THROWS_AS(GroupHom(z2, z4, SparseMatrix::from_dense({{1}})), std::invalid_argument);
  CHECK_NOTHROW(GroupHom(z2, z4, SparseMatrix::from_dense({{2}})));
  auto sub = Subgroup::generated_by(group_from_orders({4}), {{2}});
  CHECK_THROWS_AS(GroupHom(z4, sub, SparseMatrix::identity(1)), std::invalid_argument);
  CHECK_THROWS_AS(quotient_invariants(sub, hom_kernel(GroupHom::zero(z4, z4)).inclusion), std::invalid_argument);
  // A non-injective structure map.
  auto z2_to_z4 = GroupHom(z4, z4, SparseMatrix::from_dense({{2}}));
  CHECK_THROWS_AS(quotient_invariants(z4, z2_to_z4), std::invalid_argument);
}

TEST_CASE("random homs against enumeration") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    FiniteAbelianGroup src = random_group(rng, 3, 9);
    FiniteAbelianGroup dst = random_group(rng, 3, 9);
    if (src.size() > 400 || dst.size() > 400) continue;
    auto M = random_hom_matrix(src, dst, rng);
    Subgroup D = Subgroup::whole(src);
    Subgroup C = Subgroup::whole(dst);
    GroupHom h(D, C, SparseMatrix::from_dense(M, src.rank()));

    std::set<Vector> kernel, image;
    std::map<Vector, Vector> least_preimage;
    for (const auto& x : elements(src)) {
      Vector y = brute_apply(M, dst, x.coordinates);
      CHECK(h.apply(x.coordinates) == y);
      if (std::all_of(y.begin(), y.end(), [](auto v) { return v == 0; })) kernel.insert(x.coordinates);
      image.insert(y);
      least_preimage.emplace(y, x.coordinates);
    }
    for (const auto& x : elements(src))
      for (const auto& z : elements(src)) {
        if ((rng() & 15) != 0) continue;
        CHECK(h(src.add(x, z)) == dst.add(h(x), h(z)));
      }

    Subgroup K = kernel_subgroup(h);
    Subgroup Im = image_subgroup(h);
    CHECK(K.order() == kernel.size());
    CHECK(Im.order() == image.size());
    CHECK(K.order() * Im.order() == src.order());
    for (const auto& x : elements(src)) CHECK(K.contains(x.coordinates) == kernel.count(x.coordinates));
    for (const auto& y : elements(dst)) {
      auto p = preimage(h, y.coordinates);
      auto it = least_preimage.find(y.coordinates);
      if (it == least_preimage.end()) CHECK_FALSE(p.has_value());
      else CHECK(p == it->second);
    }

    // First isomorphism theorem via torsion profiles.
    auto q = to_i64(quotient_invariants(D, hom_kernel(h).inclusion));
    auto im_inv = to_i64(Im.invariant_factors());
    CHECK(q == im_inv);
    std::int64_t bound = 1;
    for (std::int64_t m : dst.cyclic_orders()) bound = std::lcm(bound, m);
    std::vector<std::uint64_t> profile;
    for (std::int64_t k = 1; k <= bound; ++k) {
      std::uint64_t n = 0;
      for (const Vector& y : image) {
        Vector ky = y;
        for (std::size_t i = 0; i < ky.size(); ++i) ky[i] = mod(k * ky[i], dst.cyclic_order(i));
        n += std::all_of(ky.begin(), ky.end(), [](auto v) { return v == 0; });
      }
      profile.push_back(n);
    }
    CHECK(profile == torsion_profile(im_inv, bound));
  }
}

TEST_CASE("quotients of random subgroups against coset enumeration") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    FiniteAbelianGroup amb = random_group(rng, 3, 8);
    if (amb.size() > 300) continue;
    auto all = elements(amb);
    auto pick = [&](int n) {
      std::vector<Vector> v;
      for (int i = 0; i < n; ++i) v.push_back(all[rng() % all.size()].coordinates);
      return v;
    };
    auto g_gens = pick(3);
    Subgroup G = Subgroup::generated_by(amb, g_gens);
    std::vector<Vector> s_gens;
    for (const Vector& x : pick(2)) {
      Vector y = G.reduce(x);
      Vector z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod(x[i] - y[i], amb.cyclic_order(i));
      s_gens.push_back(z);  // x minus its remainder lies in G
    }
    Subgroup S = Subgroup::generated_by(amb, s_gens);
    REQUIRE(G.contains(S));

    // Closure by brute force.
    auto closure = [&](const std::vector<Vector>& gens) {
      std::set<Vector> set{amb.zero().coordinates};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Vector> cur(set.begin(), set.end());
        for (const Vector& a : cur)
          for (const Vector& b : gens) {
            Vector c = amb.add(GroupElement{a}, amb.element(b)).coordinates;
            grew |= set.insert(c).second;
          }
      }
      return set;
    };
    auto gset = closure(g_gens);
    auto sset = closure(s_gens);
    CHECK(G.order() == gset.size());
    CHECK(S.order() == sset.size());
    for (const auto& x : all) {
      CHECK(G.contains(x.coordinates) == gset.count(x.coordinates));
      Vector r = S.reduce(x.coordinates);
      Vector least = x.coordinates;
      bool found_least = false;
      for (const auto& y : all) {
        Vector d = amb.sub(y, x).coordinates;
        if (sset.count(d)) {
          least = y.coordinates;
          found_least = true;
          break;
        }
      }
      CHECK(found_least);
      CHECK(r == least);
    }

    std::int64_t bound = 1;
    for (std::int64_t m : amb.cyclic_orders()) bound = std::lcm(bound, m);
    std::vector<std::uint64_t> profile;
    for (std::int64_t k = 1; k <= bound; ++k) {
      std::set<Vector> killed;
      for (const Vector& x : gset) {
        Vector kx = amb.multiple(k, GroupElement{x}).coordinates;
        if (sset.count(kx)) killed.insert(S.reduce(x));
      }
      profile.push_back(killed.size());
    }
    CHECK(profile == torsion_profile(to_i64(quotient_invariants(G, S)), bound));
  }
}
