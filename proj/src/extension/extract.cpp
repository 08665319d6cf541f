#include "lcsext/extension/extract.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsext::extension {

void validate_exact(const AbstractExtension& E) {
  const auto& I = E.I;
  const auto& B = E.B;
  const auto& H = E.H;
  if (E.iota.size() != I.size() || E.pi.size() != B.size())
    throw std::invalid_argument("iota and pi must be tables on I and B");
  for (Index v : E.iota)
    if (v >= B.size()) throw std::invalid_argument("iota has values outside B");
  for (Index v : E.pi)
    if (v >= H.size()) throw std::invalid_argument("pi has values outside H");
  for (Index y = 0; y < I.size(); ++y)
    for (Index z = 0; z < I.size(); ++z)
      if (E.iota[I.add(y, z)] != B.add(E.iota[y], E.iota[z]) || E.iota[I.dot(y, z)] != B.dot(E.iota[y], E.iota[z]))
        throw std::invalid_argument("iota is not a morphism of linear cycle sets");
  for (Index a = 0; a < B.size(); ++a)
    for (Index b = 0; b < B.size(); ++b)
      if (E.pi[B.add(a, b)] != H.add(E.pi[a], E.pi[b]) || E.pi[B.dot(a, b)] != H.dot(E.pi[a], E.pi[b]))
        throw std::invalid_argument("pi is not a morphism of linear cycle sets");
  std::vector<bool> hit_b(B.size(), false), hit_h(H.size(), false);
  for (Index y = 0; y < I.size(); ++y) {
    if (hit_b[E.iota[y]]) throw std::invalid_argument("iota is not injective");
    hit_b[E.iota[y]] = true;
  }
  for (Index b = 0; b < B.size(); ++b) {
    hit_h[E.pi[b]] = true;
    if ((E.pi[b] == 0) != hit_b[b]) throw std::invalid_argument("image of iota differs from the kernel of pi");
  }
  if (std::find(hit_h.begin(), hit_h.end(), false) != hit_h.end())
    throw std::invalid_argument("pi is not surjective");
}

ExtensionData extract_data(const AbstractExtension& E, const std::vector<Index>& s) {
  validate_exact(E);
  const auto& B = E.B;
  const auto& H = E.H;
  const Index ni = static_cast<Index>(E.I.size()), nh = static_cast<Index>(H.size());
  if (s.size() != nh) throw std::invalid_argument("section must have one entry per element of H");
  if (s[0] != 0) throw std::invalid_argument("section must satisfy s(0) = 0");
  for (Index h = 0; h < nh; ++h)
    if (s[h] >= B.size() || E.pi[s[h]] != h) throw std::invalid_argument("s is not a section of pi");

  std::vector<std::int64_t> back(B.size(), -1);
  for (Index y = 0; y < ni; ++y) back[E.iota[y]] = y;
  auto inv = [&](Index b) {
    if (back[b] < 0) throw std::logic_error("element outside the image of iota");
    return static_cast<Index>(back[b]);
  };

  ExtensionData d{E.I, H, constant_table(nh, nh), constant_table(nh, nh), constant_table(nh, ni),
                  constant_table(ni, nh)};
  for (Index h = 0; h < nh; ++h) {
    for (Index g = 0; g < nh; ++g) {
      d.beta[h][g] = inv(B.sub(B.add(s[h], s[g]), s[H.add(h, g)]));
      d.f[h][g] = inv(B.sub(B.dot(s[h], s[g]), s[H.dot(h, g)]));
    }
    for (Index y = 0; y < ni; ++y) {
      d.diamond[h][y] = inv(B.dot(s[h], E.iota[y]));
      d.yleft[y][h] = inv(B.sub(B.dot(E.iota[y], s[h]), s[h]));
    }
  }
  return d;
}

AbstractExtension as_abstract(const ProductExtension& P) {
  AbstractExtension E{P.data.I, extension_lcs(P), P.data.H, {}, {}};
  for (Index y = 0; y < P.data.I.size(); ++y) E.iota.push_back(P.iota(y));
  for (Index b = 0; b < P.size(); ++b) E.pi.push_back(P.pi(b));
  return E;
}

std::size_t for_each_section(const AbstractExtension& E, const std::function<void(const std::vector<Index>&)>& visit) {
  const std::size_t nh = E.H.size();
  std::vector<std::vector<Index>> fibers(nh);
  for (Index b = 0; b < E.B.size(); ++b) fibers[E.pi[b]].push_back(b);
  std::vector<Index> s(nh, 0);
  std::vector<std::size_t> choice(nh, 0);
  std::size_t count = 0;
  while (true) {
    for (std::size_t h = 1; h < nh; ++h) s[h] = fibers[h][choice[h]];
    visit(s);
    ++count;
    std::size_t k = nh;
    while (k > 1) {
      --k;
      if (++choice[k] < fibers[k].size()) break;
      choice[k] = 0;
      if (k == 1) return count;
    }
    if (nh <= 1) return count;
  }
}

AbstractExtension ideal_extension(const LinearCycleSet& B, const lcs::Substructure& J) {
  if (!lcs::is_ideal(B, J)) throw std::invalid_argument("the subset is not an ideal");
  const std::size_t n = B.size();
  // Cosets are labelled by their least element; label 0 is J itself.
  std::vector<Index> rep(n), reps;
  std::vector<std::int64_t> coset(n, -1);
  for (Index b = 0; b < n; ++b) {
    if (coset[b] >= 0) continue;
    Index label = static_cast<Index>(reps.size());
    reps.push_back(b);
    for (Index y : J.elements) coset[B.add(b, y)] = label;
  }
  const std::size_t nh = reps.size(), ni = J.size();
  std::vector<Index> jpos(n, 0);
  for (Index k = 0; k < ni; ++k) jpos[J.elements[k]] = k;

  std::vector<Index> isum(ni * ni), idot(ni * ni), hsum(nh * nh), hdot(nh * nh);
  for (Index a = 0; a < ni; ++a)
    for (Index b = 0; b < ni; ++b) {
      isum[a * ni + b] = jpos[B.add(J.elements[a], J.elements[b])];
      idot[a * ni + b] = jpos[B.dot(J.elements[a], J.elements[b])];
    }
  for (Index a = 0; a < nh; ++a)
    for (Index b = 0; b < nh; ++b) {
      hsum[a * nh + b] = static_cast<Index>(coset[B.add(reps[a], reps[b])]);
      hdot[a * nh + b] = static_cast<Index>(coset[B.dot(reps[a], reps[b])]);
    }
  AbstractExtension E{lcs::make_lcs(lcs::AdditiveGroup::from_table(ni, isum), idot), B,
                      lcs::make_lcs(lcs::AdditiveGroup::from_table(nh, hsum), hdot), J.elements, {}};
  for (Index b = 0; b < n; ++b) E.pi.push_back(static_cast<Index>(coset[b]));
  validate_exact(E);
  return E;
}

}  // namespace lcsext::extension
