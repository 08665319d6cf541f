#include "lcsext/extension/equivalence.hpp"

#include <stdexcept>

#include "lcsext/errors.hpp"
#include "lcsext/lcs/structure.hpp"

namespace lcsext::extension {

bool is_equivalence_map(const ProductExtension& E1, const ProductExtension& E2, const std::vector<Index>& phi) {
  const auto& I = E1.data.I;
  const std::size_t n = E1.size();
  if (phi.size() != E1.data.H.size() || phi[0] != 0) return false;
  std::vector<Index> map(n);
  for (Index b = 0; b < n; ++b) {
    Index y = E1.y_part(b), h = E1.h_part(b);
    map[b] = E2.element(I.add(y, phi[h]), h);
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (map[E1.add(a, b)] != E2.add(map[a], map[b]) || map[E1.mul(a, b)] != E2.mul(map[a], map[b])) return false;
  return true;
}

std::optional<EquivalenceWitness> extensions_equivalent(const ProductExtension& E1, const ProductExtension& E2,
                                                        std::uint64_t max_search) {
  const ExtensionData& d1 = E1.data;
  const ExtensionData& d2 = E2.data;
  if (!(d1.I == d2.I) || !(d1.H == d2.H)) throw std::invalid_argument("extensions must share I and H");
  const auto& I = d1.I;
  const auto& H = d1.H;
  const std::size_t ni = I.size(), nh = H.size();
  long double space = 1;
  for (std::size_t k = 1; k < nh; ++k) space *= static_cast<long double>(ni);
  if (space > static_cast<long double>(max_search))
    throw GuardError("equivalence search space |I|^(|H|-1) exceeds the limit " + std::to_string(max_search));
  if (d1.diamond != d2.diamond || d1.yleft != d2.yleft) return std::nullopt;

  const lcs::Substructure soc = lcs::socle(I);
  // phi(h) must be fixed by every left translation and h<>phi(h) must lie in Soc(I).
  std::vector<std::vector<Index>> allowed(nh);
  for (Index h = 0; h < nh; ++h)
    for (Index v = 0; v < ni; ++v) {
      bool ok = soc.contains(d1.dia(h, v));
      for (Index y = 0; y < ni && ok; ++y) ok = I.dot(y, v) == v;
      if (ok) allowed[h].push_back(v);
    }

  using State = std::vector<std::int64_t>;
  auto assign = [&](State& st, Index h, Index v) {
    if (st[h] >= 0) return st[h] == v;
    for (Index a : allowed[h])
      if (a == v) {
        st[h] = v;
        return true;
      }
    return false;
  };
  // phi(h+h') = phi(h) + phi(h') - beta(h,h') + beta'(h,h') and
  // f(h,h') + phi(h.h') = (h<>phi(h)).(h<>phi(h')) + (h<>phi(h)).f'(h,h') + (h<>phi(h))<|(h.h').
  auto propagate = [&](State& st) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Index h = 0; h < nh; ++h) {
        if (st[h] < 0) continue;
        for (Index g = 0; g < nh; ++g) {
          if (st[g] < 0) continue;
          Index ph = static_cast<Index>(st[h]), pg = static_cast<Index>(st[g]);
          Index s = H.add(h, g);
          Index vs = I.add(I.sub(I.add(ph, pg), d1.beta[h][g]), d2.beta[h][g]);
          bool was = st[s] >= 0;
          if (!assign(st, s, vs)) return false;
          changed |= !was;
          Index p = H.dot(h, g);
          Index hp = d1.dia(h, ph);
          Index vp = I.sub(I.add(I.add(I.dot(hp, d1.dia(h, pg)), I.dot(hp, d2.f[h][g])), d1.yl(hp, p)), d1.f[h][g]);
          was = st[p] >= 0;
          if (!assign(st, p, vp)) return false;
          changed |= !was;
        }
      }
    }
    return true;
  };

  std::optional<EquivalenceWitness> found;
  auto search = [&](auto&& self, State st) -> void {
    if (found || !propagate(st)) return;
    Index next = 0;
    while (next < nh && st[next] >= 0) ++next;
    if (next == nh) {
      std::vector<Index> phi(st.begin(), st.end());
      if (is_equivalence_map(E1, E2, phi)) found = EquivalenceWitness{phi};
      return;
    }
    for (Index v : allowed[next]) {
      State child = st;
      child[next] = v;
      self(self, std::move(child));
      if (found) return;
    }
  };
  State start(nh, -1);
  start[0] = 0;
  search(search, start);

  if (found) {
    const lcs::Substructure z = lcs::center(I);
    for (Index v : found->phi)
      if (!z.contains(v)) throw std::logic_error("equivalence witness takes a value outside Z(I)");
  }
  return found;
}

}  // namespace lcsext::extension
