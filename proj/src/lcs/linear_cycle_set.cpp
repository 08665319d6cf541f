#include "lcsext/lcs/linear_cycle_set.hpp"

#include <stdexcept>

namespace lcsext::lcs {

std::vector<std::vector<Index>> LinearCycleSet::dot_rows() const {
  std::vector<std::vector<Index>> rows(size());
  for (std::size_t a = 0; a < size(); ++a)
    rows[a].assign(dot_.begin() + static_cast<std::ptrdiff_t>(a * size()),
                   dot_.begin() + static_cast<std::ptrdiff_t>((a + 1) * size()));
  return rows;
}

bool LinearCycleSet::is_trivial() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (dot(static_cast<Index>(a), static_cast<Index>(b)) != b) return false;
  return true;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::bijectivity:
      return "bijective left translations";
    case Axiom::left_distributivity:
      return "a.(b+c) = a.b + a.c";
    case Axiom::cycle_compatibility:
      return "(a+b).c = (a.b).(a.c)";
  }
  return "";
}

const AxiomViolation& LcsValidation::first() const {
  if (violations.empty()) throw std::logic_error("no violation recorded");
  return violations.front();
}

LcsValidation lcs_from_table(const AdditiveGroup& group, std::vector<Index> dot_table) {
  const std::size_t n = group.size();
  if (dot_table.size() != n * n)
    throw std::invalid_argument("dot table has " + std::to_string(dot_table.size()) + " entries, expected " +
                                std::to_string(n * n));
  for (Index v : dot_table)
    if (v >= n) throw std::invalid_argument("dot table entry " + std::to_string(v) + " out of range");
  auto dot = [&](Index a, Index b) { return dot_table[a * n + b]; };

  LcsValidation out;
  std::vector<Index> inv(n * n, 0);
  bool bijective = true;
  for (Index a = 0; a < n && bijective; ++a) {
    std::vector<std::int64_t> seen(n, -1);
    for (Index b = 0; b < n; ++b) {
      Index v = dot(a, b);
      if (seen[v] >= 0) {
        out.violations.push_back({Axiom::bijectivity, {a, static_cast<Index>(seen[v]), b}});
        bijective = false;
        break;
      }
      seen[v] = b;
      inv[a * n + v] = b;
    }
  }

  auto scan = [&](Axiom axiom, auto&& holds) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (!holds(a, b, c)) {
            out.violations.push_back({axiom, {a, b, c}});
            return;
          }
  };
  scan(Axiom::left_distributivity,
       [&](Index a, Index b, Index c) { return dot(a, group.add(b, c)) == group.add(dot(a, b), dot(a, c)); });
  scan(Axiom::cycle_compatibility,
       [&](Index a, Index b, Index c) { return dot(group.add(a, b), c) == dot(dot(a, b), dot(a, c)); });

  if (out.violations.empty()) {
    LinearCycleSet L;
    L.group_ = group;
    L.dot_ = std::move(dot_table);
    L.inv_dot_ = std::move(inv);
    out.lcs = std::move(L);
  }
  return out;
}

LcsValidation lcs_from_table(const abelian::FiniteAbelianGroup& group, const std::vector<std::vector<Index>>& rows) {
  AdditiveGroup A = AdditiveGroup::from_group(group);
  if (rows.size() != A.size()) throw std::invalid_argument("dot table must have one row per element");
  std::vector<Index> flat;
  for (const auto& r : rows) {
    if (r.size() != A.size()) throw std::invalid_argument("dot table row has wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return lcs_from_table(A, std::move(flat));
}

LinearCycleSet make_lcs(const AdditiveGroup& group, std::vector<Index> dot_table) {
  LcsValidation v = lcs_from_table(group, std::move(dot_table));
  if (!v.valid()) {
    const AxiomViolation& w = v.first();
    std::string msg = "not a linear cycle set: " + axiom_name(w.axiom) + " fails at (";
    for (std::size_t i = 0; i < w.witness.size(); ++i) msg += (i ? "," : "") + std::to_string(w.witness[i]);
    throw std::invalid_argument(msg + ")");
  }
  return std::move(*v.lcs);
}

LinearCycleSet trivial_lcs(const AdditiveGroup& group) {
  const std::size_t n = group.size();
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Index>(b);
  return make_lcs(group, std::move(table));
}

LinearCycleSet trivial_lcs(const abelian::FiniteAbelianGroup& group) {
  return trivial_lcs(AdditiveGroup::from_group(group));
}

}  // namespace lcsext::lcs
