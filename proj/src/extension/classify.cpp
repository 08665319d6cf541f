#include "lcsext/extension/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcsext/errors.hpp"
#include "lcsext/extension/checks.hpp"
#include "lcsext/lcs/brace.hpp"

namespace lcsext::extension {

std::vector<std::vector<Index>> additive_endomorphisms(const lcs::AdditiveGroup& A) {
  const std::size_t n = A.size();
  std::vector<Index> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (Index x = 0; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    std::vector<Index> frontier;
    for (Index y = 0; y < n; ++y)
      if (reached[y]) frontier.push_back(y);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Index t = A.add(frontier[i], x);
      if (!reached[t]) {
        reached[t] = true;
        frontier.push_back(t);
      }
    }
  }

  std::vector<std::vector<Index>> out;
  std::vector<Index> img(gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> map(n, -1);
    map[0] = 0;
    std::vector<Index> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        Index t = A.add(queue[i], gens[k]);
        Index v = A.add(static_cast<Index>(map[queue[i]]), img[k]);
        if (map[t] < 0) {
          map[t] = v;
          queue.push_back(t);
        } else {
          ok = map[t] == v;
        }
      }
    if (ok) out.emplace_back(map.begin(), map.end());
    std::size_t k = 0;
    while (k < img.size() && ++img[k] == n) img[k++] = 0;
    if (k == img.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ActionPair> admissible_actions(const LinearCycleSet& I, const LinearCycleSet& H) {
  if (!I.is_trivial()) throw std::invalid_argument("admissible_actions needs a trivial I");
  const std::size_t ni = I.size(), nh = H.size();
  const auto ends = additive_endomorphisms(I.group());
  std::vector<const std::vector<Index>*> auts;
  for (const auto& e : ends) {
    std::vector<bool> hit(ni, false);
    bool bij = true;
    for (Index v : e) {
      bij &= !hit[v];
      hit[v] = true;
    }
    if (bij) auts.push_back(&e);
  }
  const lcs::Brace HB = lcs::lcs_to_brace(H);

  // Rows h -> (y -> h<>y) with h'h<>y = h<>(h'<>y).
  std::vector<Table> diamonds;
  Table dia(nh);
  for (Index y = 0; y < ni; ++y) dia[0].push_back(y);
  auto dia_rec = [&](auto&& self, Index h) -> void {
    if (h == nh) {
      diamonds.push_back(dia);
      return;
    }
    for (const auto* row : auts) {
      dia[h] = *row;
      bool ok = true;
      for (Index a = 0; a <= h && ok; ++a)
        for (Index b = 0; b <= h && ok; ++b) {
          Index p = HB.mul(b, a);
          if (p > h || (a != h && b != h && p != h)) continue;
          for (Index y = 0; y < ni && ok; ++y) ok = dia[p][y] == dia[a][dia[b][y]];
        }
      if (ok) self(self, h + 1);
    }
    dia[h].clear();
  };
  if (nh > 0) dia_rec(dia_rec, 1);

  // Rows h -> (y -> y<|h), additive in h.
  std::vector<Table> yleft_tables;
  std::vector<std::vector<Index>> cols(nh, std::vector<Index>(ni, 0));
  auto yl_rec = [&](auto&& self, Index h) -> void {
    if (h == nh) {
      Table t(ni, std::vector<Index>(nh));
      for (Index y = 0; y < ni; ++y)
        for (Index g = 0; g < nh; ++g) t[y][g] = cols[g][y];
      yleft_tables.push_back(std::move(t));
      return;
    }
    for (const auto& e : ends) {
      cols[h] = e;
      bool ok = true;
      for (Index a = 0; a <= h && ok; ++a)
        for (Index b = 0; b <= h && ok; ++b) {
          Index s = H.add(a, b);
          if (s > h || (a != h && b != h && s != h)) continue;
          for (Index y = 0; y < ni && ok; ++y) ok = cols[s][y] == I.add(cols[a][y], cols[b][y]);
        }
      if (ok) self(self, h + 1);
    }
    cols[h].assign(ni, 0);
  };
  if (nh > 0) yl_rec(yl_rec, 1);

  std::vector<ActionPair> out;
  for (const auto& dt : diamonds)
    for (const auto& yt : yleft_tables) {
      ExtensionData d{I, H, constant_table(nh, nh), constant_table(nh, nh), dt, yt};
      if (action_laws(d).pass()) out.push_back({dt, yt});
    }
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionData with_cocycle(const LinearCycleSet& I, const LinearCycleSet& H, const ActionPair& actions,
                           const Cocycle& c) {
  return make_extension_data(I, H, c.beta, c.f, actions.diamond, actions.yleft);
}

std::vector<Cocycle> enumerate_cocycles(const LinearCycleSet& I, const LinearCycleSet& H, const ActionPair& actions) {
  const Index ni = static_cast<Index>(I.size()), nh = static_cast<Index>(H.size());
  ExtensionData d = make_extension_data(I, H, constant_table(nh, nh), constant_table(nh, nh), actions.diamond,
                                        actions.yleft);
  {
    CheckReport laws = action_laws(d);
    if (const IdentityCheck* bad = laws.first_failure())
      throw ActionLawError("action law violated: " + bad->formula);
  }

  // Free cells: beta(h,g) for 0 < h <= g, then f(h,g) for h, g != 0.
  struct Cell {
    bool is_beta;
    Index h, g;
  };
  std::vector<Cell> vars;
  std::vector<std::vector<int>> beta_var(nh, std::vector<int>(nh, -1)), f_var(nh, std::vector<int>(nh, -1));
  for (Index h = 1; h < nh; ++h)
    for (Index g = h; g < nh; ++g) {
      beta_var[h][g] = beta_var[g][h] = static_cast<int>(vars.size());
      vars.push_back({true, h, g});
    }
  for (Index h = 1; h < nh; ++h)
    for (Index g = 1; g < nh; ++g) {
      f_var[h][g] = static_cast<int>(vars.size());
      vars.push_back({false, h, g});
    }

  // Constraint instances (kind, a, b, c) bucketed by their last free cell.
  struct Instance {
    int kind;
    Index a, b, c;
  };
  std::vector<std::vector<Instance>> bucket(vars.size() + 1);
  auto last_of = [](std::initializer_list<int> ids) {
    int m = -1;
    for (int v : ids) m = std::max(m, v);
    return m;
  };
  for (Index a = 0; a < nh; ++a)
    for (Index b = 0; b < nh; ++b)
      for (Index c = 0; c < nh; ++c) {
        Index ab = H.add(a, b), bc = H.add(b, c), pa = H.dot(a, b), pc = H.dot(a, c);
        int l0 = last_of({beta_var[a][b], beta_var[ab][c], beta_var[b][c], beta_var[a][bc]});
        int l1 = last_of({beta_var[b][c], f_var[a][bc], f_var[a][b], f_var[a][c], beta_var[pa][pc]});
        int l2 = last_of({f_var[ab][c], beta_var[a][b], f_var[a][c], f_var[pa][pc], f_var[a][b]});
        bucket[static_cast<std::size_t>(l0 + 1)].push_back({0, a, b, c});
        bucket[static_cast<std::size_t>(l1 + 1)].push_back({1, a, b, c});
        bucket[static_cast<std::size_t>(l2 + 1)].push_back({2, a, b, c});
      }
  auto holds = [&](const Instance& t) {
    auto [a, b, c] = std::tuple{t.a, t.b, t.c};
    switch (t.kind) {
      case 0:
        return I.add(d.beta[a][b], d.beta[H.add(a, b)][c]) == I.add(d.beta[b][c], d.beta[a][H.add(b, c)]);
      case 1:
        return I.add(d.dia(a, d.beta[b][c]), d.f[a][H.add(b, c)]) ==
               I.add(I.add(d.f[a][b], d.f[a][c]), d.beta[H.dot(a, b)][H.dot(a, c)]);
      default: {
        Index s = H.add(a, b), p = H.dot(a, b);
        Index lhs = I.add(d.f[s][c], d.yl(d.dia(s, d.beta[a][b]), H.dot(s, c)));
        Index rhs = I.add(I.add(d.dia(p, d.f[a][c]), d.f[p][H.dot(a, c)]),
                          d.yl(d.dia(p, d.f[a][b]), H.dot(p, H.dot(a, c))));
        return lhs == rhs;
      }
    }
  };

  std::vector<Cocycle> out;
  for (const auto& t : bucket[0])
    if (!holds(t)) return out;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == vars.size()) {
      out.push_back({d.beta, d.f});
      return;
    }
    const Cell& cell = vars[v];
    for (Index val = 0; val < ni; ++val) {
      if (cell.is_beta) {
        d.beta[cell.h][cell.g] = d.beta[cell.g][cell.h] = val;
      } else {
        d.f[cell.h][cell.g] = val;
      }
      bool ok = true;
      for (const auto& t : bucket[v + 1])
        if (!(ok = holds(t))) break;
      if (ok) self(self, v + 1);
    }
    if (cell.is_beta) {
      d.beta[cell.h][cell.g] = d.beta[cell.g][cell.h] = 0;
    } else {
      d.f[cell.h][cell.g] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

Classification classify_extensions(const LinearCycleSet& I, const LinearCycleSet& H, const ActionPair& actions,
                                   const ClassifyLimits& limits) {
  if (I.size() > limits.max_order || H.size() > limits.max_order)
    throw GuardError("classification is limited to |I|, |H| <= " + std::to_string(limits.max_order));
  if (!I.is_trivial()) throw std::invalid_argument("classification needs a trivial I");
  Classification out;
  out.cocycles = enumerate_cocycles(I, H, actions);
  for (const Cocycle& c : out.cocycles) {
    ExtensionData d = with_cocycle(I, H, actions, c);
    if (!check_trivial_ideal(d).pass()) throw std::logic_error("enumerated cocycle fails the trivial-ideal ledger");
    ProductExtension E = build_product_extension(d);
    std::size_t cls = out.representatives.size();
    for (std::size_t r = 0; r < out.representatives.size(); ++r)
      if (extensions_equivalent(out.representatives[r], E, limits.max_search)) {
        cls = r;
        break;
      }
    if (cls == out.representatives.size()) out.representatives.push_back(std::move(E));
    out.class_of.push_back(cls);
  }
  return out;
}

}  // namespace lcsext::extension
