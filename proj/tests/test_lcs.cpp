#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "lcsext/errors.hpp"
#include "lcsext/lcs/brace.hpp"
#include "lcsext/lcs/structure.hpp"

using namespace lcsext::lcs;
using lcsext::abelian::FiniteAbelianGroup;

namespace {

// Raw enumeration: every row is a permutation preserving the sum, every table
// combination is then validated.
std::vector<std::vector<Index>> brute_force_tables(const FiniteAbelianGroup& g) {
  AdditiveGroup A = AdditiveGroup::from_group(g);
  const Index n = static_cast<Index>(A.size());
  std::vector<std::vector<Index>> rows;
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool additive = true;
    for (Index b = 0; b < n && additive; ++b)
      for (Index c = 0; c < n && additive; ++c) additive = perm[A.add(b, c)] == A.add(perm[b], perm[c]);
    if (additive) rows.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<Index>> out;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    std::vector<Index> table;
    for (Index a = 0; a < n; ++a) table.insert(table.end(), rows[choice[a]].begin(), rows[choice[a]].end());
    if (lcs_from_table(A, table).valid()) out.push_back(table);
    Index k = 0;
    while (k < n && ++choice[k] == rows.size()) choice[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validation of tables") {
  FiniteAbelianGroup z2({2});
  CHECK(lcs_from_table(z2, {{0, 1}, {0, 1}}).valid());

  // 1.b = b + 1: both laws first fail at (1,0,0); (1,1,c) also breaks compatibility.
  auto shifted = lcs_from_table(z2, {{0, 1}, {1, 0}});
  REQUIRE_FALSE(shifted.valid());
  REQUIRE(shifted.violations.size() == 2);
  CHECK(shifted.first().axiom == Axiom::left_distributivity);
  CHECK(shifted.first().witness == std::vector<Index>{1, 0, 0});
  CHECK(shifted.violations[1].axiom == Axiom::cycle_compatibility);
  CHECK(shifted.violations[1].witness == std::vector<Index>{1, 0, 0});
  auto dot = [](Index a, Index b) { return a == 0 ? b : b ^ 1u; };
  for (Index c = 0; c < 2; ++c) CHECK(dot(1 ^ 1, c) != dot(dot(1, 1), dot(1, c)));

  auto broken = lcs_from_table(FiniteAbelianGroup({3}), {{0, 1, 2}, {0, 0, 2}, {0, 1, 2}});
  REQUIRE_FALSE(broken.valid());
  CHECK(broken.first().axiom == Axiom::bijectivity);
  CHECK(broken.first().witness == std::vector<Index>{1, 0, 1});

  CHECK_THROWS_AS(lcs_from_table(z2, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(lcs_from_table(z2, {{0, 1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("trivial structures") {
  for (auto orders : {std::vector<std::int64_t>{}, {2}, {3}, {2, 2}, {4}}) {
    FiniteAbelianGroup g(orders);
    LinearCycleSet L = trivial_lcs(g);
    CHECK(L.is_trivial());
    Brace B = lcs_to_brace(L);
    for (Index a = 0; a < L.size(); ++a)
      for (Index b = 0; b < L.size(); ++b) CHECK(B.mul(a, b) == L.add(a, b));
    CHECK(brace_to_lcs(B) == L);
    CHECK(socle(L).size() == L.size());
    CHECK(center(L).size() == L.size());
  }
  LinearCycleSet zero = trivial_lcs(FiniteAbelianGroup{});
  CHECK(zero.size() == 1);
  CHECK(socle(zero).elements == std::vector<Index>{0});
  CHECK(enumerate_lcs(FiniteAbelianGroup{}).size() == 1);
}

TEST_CASE("enumeration agrees with raw search") {
  for (auto orders : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}}) {
    FiniteAbelianGroup g(orders);
    auto expected = brute_force_tables(g);
    auto got = enumerate_lcs(g);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].dot_table() == expected[i]);
  }
  CHECK(enumerate_lcs(FiniteAbelianGroup({2})).size() == 1);
  CHECK(enumerate_lcs(FiniteAbelianGroup({3})).size() == 1);
  CHECK_THROWS_AS(enumerate_lcs(FiniteAbelianGroup({9})), lcsext::GuardError);
}

TEST_CASE("laws, brace round trip and ideals on order 4 and 8") {
  for (auto orders : {std::vector<std::int64_t>{4}, {2, 2}, {8}, {2, 4}}) {
    FiniteAbelianGroup g(orders);
    auto all = enumerate_lcs(g);
    CHECK(all.size() >= 2);
    for (const LinearCycleSet& L : all) {
      const Index n = static_cast<Index>(L.size());
      Brace B = lcs_to_brace(L);
      CHECK(brace_to_lcs(B) == L);
      CHECK(lcs_to_brace(brace_to_lcs(B)).mul_table() == B.mul_table());
      for (Index a = 0; a < n; ++a) {
        CHECK(L.dot(0, a) == a);
        CHECK(L.dot(a, 0) == 0);
        CHECK(L.yleft(0, a) == 0);
        CHECK(L.yleft(a, 0) == 0);
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < n; ++c) {
            CHECK(L.dot(L.dot(a, b), L.dot(a, c)) == L.dot(L.dot(b, a), L.dot(b, c)));
            CHECK(L.dot(a, L.add(b, c)) == B.mul(L.dot(a, b), L.dot(L.add(a, b), c)));
            CHECK(B.mul(a, L.add(b, c)) == L.sub(L.add(B.mul(a, b), B.mul(a, c)), a));
          }
      }
      Substructure soc = socle(L), z = center(L);
      CHECK(is_ideal(L, soc));
      CHECK(is_ideal(L, z));
      for (Index y : z.elements) {
        CHECK(soc.contains(y));
        for (Index a = 0; a < n; ++a) CHECK((L.dot(y, a) == a && L.dot(a, y) == y));
      }
      CHECK(is_ideal(L, make_substructure({0})));
      std::vector<Index> everything(n);
      std::iota(everything.begin(), everything.end(), 0);
      CHECK(is_ideal(L, make_substructure(everything)));
    }
  }
}

TEST_CASE("ideals and subgroups") {
  LinearCycleSet L = trivial_lcs(FiniteAbelianGroup({4}));
  CHECK(is_ideal(L, make_substructure({0, 2})));
  CHECK_THROWS_AS(is_ideal(L, make_substructure({0, 1})), std::invalid_argument);

  // Non-trivial structures on Z/4 have a proper socle.
  for (const LinearCycleSet& M : enumerate_lcs(FiniteAbelianGroup({4}))) {
    if (M.is_trivial()) continue;
    Substructure soc = socle(M);
    CHECK(soc.size() < 4);
    CHECK(is_ideal(M, soc));
  }
}

TEST_CASE("brace validation") {
  AdditiveGroup z2 = AdditiveGroup::from_group(FiniteAbelianGroup({2}));
  CHECK_FALSE(brace_violation(z2, {0, 1, 1, 0}).has_value());
  CHECK(brace_violation(z2, {0, 1, 1, 1}).has_value());
  CHECK_THROWS_AS(Brace(z2, {1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("table groups") {
  AdditiveGroup z4 = AdditiveGroup::from_table(4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
  CHECK(z4.neg(1) == 3);
  CHECK_FALSE(z4.descriptor().has_value());
  CHECK_THROWS_AS(AdditiveGroup::from_table(2, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(AdditiveGroup::from_table(2, {1, 0, 0, 1}), std::invalid_argument);
  CHECK(automorphisms(FiniteAbelianGroup({2, 2})).size() == 6);
  CHECK(automorphisms(FiniteAbelianGroup({8})).size() == 4);
  CHECK(automorphisms(FiniteAbelianGroup({2, 2, 2})).size() == 168);
}
