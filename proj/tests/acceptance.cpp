#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lcsext/cohomology/cohomology.hpp"
#include "lcsext/cohomology/verify.hpp"
#include "lcsext/extension/checks.hpp"
#include "lcsext/extension/classify.hpp"
#include "lcsext/extension/extract.hpp"
#include "lcsext/lcs/brace.hpp"
#include "lcsext/lcs/structure.hpp"

using namespace lcsext;
using extension::ActionPair;
using extension::Cocycle;
using extension::ExtensionData;
using extension::Index;
using extension::Table;
using lcs::LinearCycleSet;

namespace {

using Orders = std::vector<std::int64_t>;

struct Outcome {
  bool pass;
  std::string detail;
};

abelian::FiniteAbelianGroup G(const Orders& o) { return abelian::FiniteAbelianGroup(o); }
LinearCycleSet T(const Orders& o) { return lcs::trivial_lcs(G(o)); }

std::vector<LinearCycleSet> structures(const std::vector<Orders>& groups) {
  std::vector<LinearCycleSet> out;
  for (const auto& o : groups)
    for (auto& L : lcs::enumerate_lcs(G(o))) out.push_back(std::move(L));
  return out;
}

std::string str(std::size_t n) { return std::to_string(n); }

bool is_identity_diamond(const Table& t) {
  for (const auto& row : t)
    for (Index y = 0; y < row.size(); ++y)
      if (row[y] != y) return false;
  return true;
}

bool is_zero_table(const Table& t) {
  for (const auto& row : t)
    for (Index v : row)
      if (v != 0) return false;
  return true;
}

// Symmetric normalized tables on H satisfying the abelian cocycle law with values in `allowed`.
std::vector<Table> symmetric_cocycles(const LinearCycleSet& I, const LinearCycleSet& H,
                                      const std::vector<Index>& allowed) {
  const std::size_t nh = H.size();
  std::vector<std::pair<Index, Index>> cells;
  for (Index a = 1; a < nh; ++a)
    for (Index b = a; b < nh; ++b) cells.emplace_back(a, b);
  std::vector<Table> out;
  std::vector<std::size_t> pick(cells.size(), 0);
  while (true) {
    Table beta(nh, std::vector<Index>(nh, 0));
    for (std::size_t k = 0; k < cells.size(); ++k)
      beta[cells[k].first][cells[k].second] = beta[cells[k].second][cells[k].first] = allowed[pick[k]];
    bool ok = true;
    for (Index a = 0; a < nh && ok; ++a)
      for (Index b = 0; b < nh && ok; ++b)
        for (Index c = 0; c < nh && ok; ++c)
          ok = I.add(beta[a][b], beta[H.add(a, b)][c]) == I.add(beta[b][c], beta[a][H.add(b, c)]);
    if (ok) out.push_back(beta);
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == allowed.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

std::vector<Index> all_elements(std::size_t n) {
  std::vector<Index> v(n);
  for (Index k = 0; k < n; ++k) v[k] = k;
  return v;
}

Outcome criterion1() {
  std::size_t count = 0, nontrivial = 0;
  for (const auto& L : structures({{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}})) {
    ++count;
    if (!L.is_trivial()) ++nontrivial;
    const std::size_t n = L.size();
    for (Index a = 0; a < n; ++a) {
      std::set<Index> image;
      for (Index b = 0; b < n; ++b) image.insert(L.dot(a, b));
      if (image.size() != n) return {false, "left translation of " + str(a) + " is not bijective"};
    }
    const lcs::Brace B = lcs::lcs_to_brace(L);
    if (lcs::brace_to_lcs(B) != L) return {false, "brace round trip changes a structure"};
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) {
          if (L.dot(a, L.add(b, c)) != L.add(L.dot(a, b), L.dot(a, c))) return {false, "a.(b+c) = a.b + a.c fails"};
          if (L.dot(L.add(a, b), c) != L.dot(L.dot(a, b), L.dot(a, c))) return {false, "(a+b).c = (a.b).(a.c) fails"};
          if (L.dot(L.dot(a, b), L.dot(a, c)) != L.dot(L.dot(b, a), L.dot(b, c)))
            return {false, "(a.b).(a.c) = (b.a).(b.c) fails"};
          if (L.dot(a, L.add(b, c)) != B.mul(L.dot(a, b), L.dot(L.add(a, b), c)))
            return {false, "a.(b+c) = (a.b)((a+b).c) fails"};
        }
  }
  return {nontrivial > 0, str(count) + " structures (" + str(nontrivial) + " non-trivial) on the 7 groups of order <= 6"};
}

// Independent verdict: the product tables form a linear cycle set and iota, pi are morphisms.
bool table_oracle(const ExtensionData& d) {
  const extension::ProductExtension P = extension::build_product_extension(d);
  if (!P.validate().valid()) return false;
  const auto& I = d.I;
  const auto& H = d.H;
  for (Index y = 0; y < I.size(); ++y)
    for (Index z = 0; z < I.size(); ++z)
      if (P.add(P.iota(y), P.iota(z)) != P.iota(I.add(y, z)) || P.mul(P.iota(y), P.iota(z)) != P.iota(I.dot(y, z)))
        return false;
  for (Index a = 0; a < P.size(); ++a)
    for (Index b = 0; b < P.size(); ++b)
      if (P.pi(P.add(a, b)) != H.add(P.pi(a), P.pi(b)) || P.pi(P.mul(a, b)) != H.dot(P.pi(a), P.pi(b))) return false;
  return true;
}

struct SmallPair {
  LinearCycleSet I, H;
  std::vector<Table> betas;
  std::vector<std::vector<Index>> endos;
  std::vector<ActionPair> actions;
  std::vector<std::vector<Cocycle>> cocycles;
};

Outcome criterion2() {
  std::vector<SmallPair> pairs;
  for (const Orders& io : std::vector<Orders>{{1}, {2}, {3}})
    for (const auto& H : structures({{1}, {2}, {3}})) {
      SmallPair p{T(io), H, {}, {}, {}, {}};
      p.betas = symmetric_cocycles(p.I, H, all_elements(p.I.size()));
      p.endos = extension::additive_endomorphisms(p.I.group());
      p.actions = extension::admissible_actions(p.I, H);
      for (const auto& a : p.actions) p.cocycles.push_back(extension::enumerate_cocycles(p.I, H, a));
      pairs.push_back(std::move(p));
    }
  std::mt19937_64 rng(20240601);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t total = 3000;
  std::size_t valid = 0, invalid = 0, disagree = 0, construction = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const SmallPair& p = pairs[pick(pairs.size())];
    const std::size_t ni = p.I.size(), nh = p.H.size();
    ExtensionData d;
    if (rng() % 2 == 0) {
      const std::size_t k = pick(p.actions.size());
      d = extension::with_cocycle(p.I, p.H, p.actions[k], p.cocycles[k][pick(p.cocycles[k].size())]);
      if (rng() % 3 != 0 && ni > 1 && nh > 1) {
        switch (rng() % 4) {
          case 0: d.f[1 + pick(nh - 1)][1 + pick(nh - 1)] = static_cast<Index>(pick(ni)); break;
          case 1: d.yleft[1 + pick(ni - 1)][1 + pick(nh - 1)] = static_cast<Index>(pick(ni)); break;
          case 2: d.diamond[1 + pick(nh - 1)] = p.endos[pick(p.endos.size())]; break;
          default: d.beta = p.betas[pick(p.betas.size())];
        }
      }
    } else {
      d = extension::with_cocycle(p.I, p.H, {extension::trivial_diamond(p.I, p.H), extension::zero_yleft(p.I, p.H)},
                                  {p.betas[pick(p.betas.size())], extension::constant_table(nh, nh)});
      for (Index h = 1; h < nh; ++h) d.diamond[h] = p.endos[pick(p.endos.size())];
      for (Index y = 1; y < ni; ++y)
        for (Index h = 1; h < nh; ++h) d.yleft[y][h] = static_cast<Index>(pick(ni));
      for (Index h = 1; h < nh; ++h)
        for (Index g = 1; g < nh; ++g) d.f[h][g] = static_cast<Index>(pick(ni));
    }
    if (!extension::data_violations(d).empty()) ++construction;
    const bool oracle = table_oracle(d);
    (oracle ? valid : invalid)++;
    if (extension::check_general(d).pass() != oracle) ++disagree;
  }
  return {disagree == 0 && construction == 0 && valid > 0 && invalid > 0,
          str(total) + " instances (" + str(valid) + " extensions, " + str(invalid) + " not), " + str(disagree) +
              " disagreements"};
}

Outcome criterion3() {
  std::mt19937_64 rng(7);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  // Centrality ledger on random data with values drawn from Z(I).
  std::size_t central = 0, central_pass = 0, disagree = 0;
  for (const auto& I : structures({{1}, {2}, {3}, {4}, {2, 2}}))
    for (const auto& H : structures({{1}, {2}, {3}, {4}, {2, 2}})) {
      const auto Z = lcs::center(I).elements;
      const auto betas = symmetric_cocycles(I, H, Z);
      const auto endos = extension::additive_endomorphisms(I.group());
      const std::size_t ni = I.size(), nh = H.size();
      for (std::size_t t = 0; t < 400; ++t) {
        ExtensionData d = extension::with_cocycle(
            I, H, {extension::trivial_diamond(I, H), extension::zero_yleft(I, H)},
            {betas[pick(betas.size())], extension::constant_table(nh, nh)});
        const std::size_t style = t % 4;
        for (Index h = 1; h < nh; ++h)
          if (style >= 2) d.diamond[h] = endos[pick(endos.size())];
        for (Index y = 1; y < ni; ++y)
          for (Index h = 1; h < nh; ++h)
            if (style % 2 == 1) d.yleft[y][h] = Z[pick(Z.size())];
        for (Index h = 1; h < nh; ++h)
          for (Index g = 1; g < nh; ++g)
            if (t % 3 != 0) d.f[h][g] = Z[pick(Z.size())];
        if (!extension::central_hypothesis_holds(d)) continue;
        ++central;
        const bool general = extension::check_general(d).pass();
        if (general) ++central_pass;
        if (general != extension::check_central_cocycle(d).pass()) ++disagree;
      }
    }

  // Triangle formulations on every action pair with additive rows for trivial I.
  std::size_t instances = 0, forms_pass = 0, forms_disagree = 0;
  for (const Orders& io : std::vector<Orders>{{2}, {3}, {4}, {2, 2}})
    for (const auto& H : structures({{2}, {3}, {4}, {2, 2}})) {
      const LinearCycleSet I = T(io);
      const std::size_t ni = I.size(), nh = H.size();
      const auto endos = extension::additive_endomorphisms(I.group());
      const auto autos = lcs::automorphisms(G(io));
      std::vector<Table> yls, dias;
      std::vector<std::size_t> pick_rows(nh - 1, 0);
      auto odometer = [&](std::size_t base) {
        std::size_t k = 0;
        while (k < pick_rows.size() && ++pick_rows[k] == base) pick_rows[k++] = 0;
        return k < pick_rows.size();
      };
      do {
        Table yl(ni, std::vector<Index>(nh, 0));
        for (Index h = 1; h < nh; ++h)
          for (Index y = 0; y < ni; ++y) yl[y][h] = endos[pick_rows[h - 1]][y];
        bool additive = true;
        for (Index y = 0; y < ni && additive; ++y)
          for (Index a = 0; a < nh && additive; ++a)
            for (Index b = 0; b < nh && additive; ++b) additive = yl[y][H.add(a, b)] == I.add(yl[y][a], yl[y][b]);
        if (additive) yls.push_back(yl);
      } while (odometer(endos.size()));
      std::fill(pick_rows.begin(), pick_rows.end(), 0);
      do {
        Table dia(nh, all_elements(ni));
        for (Index h = 1; h < nh; ++h) dia[h] = autos[pick_rows[h - 1]];
        bool composes = true;
        for (Index a = 0; a < nh && composes; ++a)
          for (Index b = 0; b < nh && composes; ++b)
            for (Index y = 0; y < ni && composes; ++y) composes = dia[H.dot(a, b)][y] == dia[b][dia[a][y]];
        if (composes) dias.push_back(dia);
      } while (odometer(autos.size()));
      for (const auto& dia : dias)
        for (const auto& yl : yls) {
          ExtensionData d = extension::with_cocycle(
              I, H, {dia, yl}, {extension::constant_table(nh, nh), extension::constant_table(nh, nh)});
          const auto c = extension::compare_triangle_forms(d);
          if (!c.hypotheses) continue;
          ++instances;
          if (c.yleft_form) ++forms_pass;
          if (c.yleft_form != c.triangle_form) ++forms_disagree;
        }
    }
  const bool pass = disagree == 0 && forms_disagree == 0 && central_pass > 0 && central_pass < central &&
                    forms_pass > 0 && forms_pass < instances;
  return {pass, str(central) + " central instances (" + str(central_pass) + " extensions), " + str(disagree) +
                    " disagreements; " + str(instances) + " action pairs (" + str(forms_pass) +
                    " satisfying the triangle law), " + str(forms_disagree) + " disagreements"};
}

Outcome criterion4() {
  const std::size_t maxdeg = 4;
  struct Job {
    Orders io;
    LinearCycleSet H;
    ActionPair actions;
    bool supplement;
  };
  std::vector<Job> jobs;
  const auto Hs = structures({{2}, {3}, {4}, {2, 2}});
  for (const Orders& io : std::vector<Orders>{{2}, {3}, {4}, {2, 2}})
    for (const auto& H : Hs)
      for (auto& a : extension::admissible_actions(T(io), H))
        jobs.push_back({io, H, std::move(a), io[0] == 4 || io.size() == 2});
  std::vector<std::size_t> violations(jobs.size(), 0);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto setup = cohomology::make_setup(jobs[k].H, G(jobs[k].io), jobs[k].actions);
    violations[k] = cohomology::verify_double_complex(setup, maxdeg).violations.size() +
                    cohomology::verify_total_complex(setup, maxdeg).violations.size();
  }

  std::size_t configurations = 0, nontrivial_diamond = 0, nonzero_yleft = 0, supplement = 0, supplement_yleft = 0;
  std::size_t total = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    total += violations[k];
    const bool zero = is_zero_table(jobs[k].actions.yleft);
    if (jobs[k].supplement) {
      ++supplement;
      if (!zero) ++supplement_yleft;
    } else {
      ++configurations;
      if (!is_identity_diamond(jobs[k].actions.diamond)) ++nontrivial_diamond;
      if (!zero) ++nonzero_yleft;
    }
  }
  return {total == 0 && nontrivial_diamond > 0 && supplement_yleft > 0,
          str(configurations) + " action pairs for I in {Z/2, Z/3} over " + str(Hs.size()) + " structures on H (" +
              str(nontrivial_diamond) + " with non-trivial <>, " + str(nonzero_yleft) +
              " with non-zero <|, none exists); supplement I in {Z/4, Z/2+Z/2}: " + str(supplement) + " pairs, " +
              str(supplement_yleft) + " with non-zero <|; degree <= " + str(maxdeg) + ", " + str(total) +
              " violations"};
}

// beta cocycle law, normalization and symmetry, and the two compatibilities with <> and <|.
bool direct_verdict(const ExtensionData& d) {
  const auto& I = d.I;
  const auto& H = d.H;
  const std::size_t nh = H.size();
  for (Index a = 0; a < nh; ++a) {
    if (d.beta[a][0] != 0 || d.beta[0][a] != 0) return false;
    for (Index b = 0; b < nh; ++b) {
      if (d.beta[a][b] != d.beta[b][a]) return false;
      for (Index c = 0; c < nh; ++c) {
        if (I.add(d.beta[a][b], d.beta[H.add(a, b)][c]) != I.add(d.beta[b][c], d.beta[a][H.add(b, c)])) return false;
        if (I.add(d.diamond[a][d.beta[b][c]], d.f[a][H.add(b, c)]) !=
            I.add(I.add(d.f[a][b], d.f[a][c]), d.beta[H.dot(a, b)][H.dot(a, c)]))
          return false;
        const Index s = H.add(a, b), p = H.dot(a, b);
        const Index lhs = I.add(d.f[s][c], d.yleft[d.diamond[s][d.beta[a][b]]][H.dot(s, c)]);
        const Index rhs = I.add(I.add(d.diamond[p][d.f[a][c]], d.f[p][H.dot(a, c)]),
                                d.yleft[d.diamond[p][d.f[a][b]]][H.dot(p, H.dot(a, c))]);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Outcome criterion5() {
  struct Config {
    LinearCycleSet I, H;
    ActionPair actions;
    cohomology::ComplexSetup setup;
    std::vector<Cocycle> reps;
    extension::AbstractExtension split;
  };
  std::vector<Config> configs;
  for (const Orders& io : std::vector<Orders>{{2}, {3}, {4}, {2, 2}})
    for (const auto& H : structures({{2}, {3}, {4}, {2, 2}}))
      for (const auto& a : extension::admissible_actions(T(io), H)) {
        Config c{T(io), H, a, cohomology::make_setup(H, G(io), a), {}, {}};
        c.reps = cohomology::h2_representatives(c.setup);
        configs.push_back(std::move(c));
      }
  std::mt19937_64 rng(11);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t total = 12000;
  std::size_t cocycles = 0, disagree = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const Config& c = configs[pick(configs.size())];
    const std::size_t ni = c.I.size(), nh = c.H.size();
    Cocycle x;
    if (t % 3 == 0) {
      x.beta = extension::constant_table(nh, nh);
      x.f = extension::constant_table(nh, nh);
      for (Index a = 1; a < nh; ++a)
        for (Index b = a; b < nh; ++b) x.beta[a][b] = x.beta[b][a] = static_cast<Index>(pick(ni));
      for (Index a = 1; a < nh; ++a)
        for (Index b = 1; b < nh; ++b) x.f[a][b] = static_cast<Index>(pick(ni));
    } else {
      // A random member of a random class: the data of a representative read through a random section.
      const auto P = extension::build_product_extension(
          extension::with_cocycle(c.I, c.H, c.actions, c.reps[pick(c.reps.size())]));
      std::vector<Index> s(nh);
      for (Index h = 1; h < nh; ++h) s[h] = P.element(static_cast<Index>(pick(ni)), h);
      const auto d = extension::extract_data(extension::as_abstract(P), s);
      x = {d.beta, d.f};
      if (t % 3 == 2 && nh > 1) x.f[1 + pick(nh - 1)][1 + pick(nh - 1)] = static_cast<Index>(pick(ni));
    }
    const auto v = cohomology::cocycle_verdicts(c.setup, x.beta, x.f);
    const bool oracle = direct_verdict(ExtensionData{c.I, c.H, x.beta, x.f, c.actions.diamond, c.actions.yleft});
    if (v.matrix) ++cocycles;
    if (v.matrix != oracle || v.direct != oracle) ++disagree;
  }
  return {disagree == 0 && cocycles > 0 && cocycles < total,
          str(total) + " tables over " + str(configs.size()) + " configurations (" + str(cocycles) + " cocycles), " +
              str(disagree) + " disagreements"};
}

Outcome criterion6() {
  const auto base = cohomology::ext_vs_h2_report(
      T({2}), T({2}), {extension::trivial_diamond(T({2}), T({2})), extension::zero_yleft(T({2}), T({2}))});
  if (base.class_count != 4 || base.h2_order != 4)
    return {false, "Z/2 by Z/2: " + str(base.class_count) + " classes, |H^2| = " + base.h2_order.str()};
  std::size_t configurations = 0, failures = 0;
  for (const Orders& io : std::vector<Orders>{{1}, {2}, {3}})
    for (const auto& H : structures({{1}, {2}, {3}}))
      for (const auto& a : extension::admissible_actions(T(io), H)) {
        ++configurations;
        const auto r = cohomology::ext_vs_h2_report(T(io), H, a);
        if (!r.counts_agree || !r.coboundary_matches_equivalence) ++failures;
      }
  return {failures == 0, "Z/2 by Z/2: 4 classes, |H^2| = 4; " + str(configurations) +
                             " configurations with |I|, |H| <= 3, " + str(failures) + " mismatches"};
}

struct SectionTally {
  std::size_t extensions = 0, sections = 0, differing = 0, sigma_nu_failures = 0;
};

void scan_sections(const extension::AbstractExtension& E, const Table* diamond, const Table* yleft,
                   SectionTally& tally) {
  ++tally.extensions;
  std::optional<ActionPair> first;
  extension::for_each_section(E, [&](const std::vector<Index>& s) {
    const ExtensionData d = extension::extract_data(E, s);
    ++tally.sections;
    if (!first) first = ActionPair{d.diamond, d.yleft};
    if (d.diamond != first->diamond || d.yleft != first->yleft) ++tally.differing;
    if (diamond && (d.diamond != *diamond || d.yleft != *yleft)) ++tally.differing;
    if (!extension::sigma_nu_check(extension::build_product_extension(d)).pass()) ++tally.sigma_nu_failures;
  });
}

SectionTally& sections_up_to_16() {
  static SectionTally tally;
  static bool done = false;
  if (done) return tally;
  done = true;
  const std::vector<Orders> groups = {{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
  for (const Orders& io : groups) {
    const LinearCycleSet I = T(io);
    for (const Orders& ho : groups) {
      if (I.size() * G(ho).size() > 16) continue;
      for (const auto& H : lcs::enumerate_lcs(G(ho)))
        for (const auto& a : extension::admissible_actions(I, H))
          for (const auto& rep : cohomology::h2_representatives(cohomology::make_setup(H, G(io), a))) {
            const auto P = extension::build_product_extension(extension::with_cocycle(I, H, a, rep));
            scan_sections(extension::as_abstract(P), &a.diamond, &a.yleft, tally);
          }
    }
  }
  for (const Orders& bo : std::vector<Orders>{{4}, {2, 2}, {8}, {2, 4}, {2, 2, 2}})
    for (const auto& B : lcs::enumerate_lcs(G(bo)))
      scan_sections(extension::ideal_extension(B, lcs::socle(B)), nullptr, nullptr, tally);
  return tally;
}

Outcome criterion7() {
  const auto& t = sections_up_to_16();
  return {t.differing == 0 && t.extensions > 0,
          str(t.extensions) + " extensions, " + str(t.sections) + " sections, " + str(t.differing) +
              " with differing <> or <|"};
}

Outcome criterion8() {
  const auto& t = sections_up_to_16();
  return {t.sigma_nu_failures == 0 && t.sections > 0,
          "data of " + str(t.sections) + " sections of " + str(t.extensions) + " extensions, " +
              str(t.sigma_nu_failures) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite", criterion1},
      {"checker soundness and completeness", criterion2},
      {"ledger equivalence", criterion3},
      {"complex suite", criterion4},
      {"degree-2 bridge", criterion5},
      {"classification vs cohomology", criterion6},
      {"section independence", criterion7},
      {"sigma/nu consistency", criterion8},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!selected.empty() && !selected.count(k + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s; %s (%.1f s)\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
