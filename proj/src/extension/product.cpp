#include "lcsext/extension/product.hpp"

#include <stdexcept>

namespace lcsext::extension {

lcs::AdditiveGroup ProductExtension::group() const { return lcs::AdditiveGroup::from_table(size(), sum); }

lcs::LcsValidation ProductExtension::validate() const { return lcs::lcs_from_table(group(), dot); }

ProductExtension build_product_extension(const ExtensionData& d) {
  ProductExtension E{d, {}, {}};
  const auto& I = d.I;
  const auto& H = d.H;
  const Index ni = static_cast<Index>(I.size()), nh = static_cast<Index>(H.size());
  const std::size_t n = E.size();
  E.sum.assign(n * n, 0);
  E.dot.assign(n * n, 0);
  for (Index y = 0; y < ni; ++y)
    for (Index h = 0; h < nh; ++h) {
      const Index a = E.element(y, h);
      const Index hy = d.dia(h, y);
      for (Index z = 0; z < ni; ++z)
        for (Index g = 0; g < nh; ++g) {
          const Index b = E.element(z, g);
          E.sum[a * n + b] = E.element(I.add(I.add(y, z), d.beta[h][g]), H.add(h, g));
          const Index hg = H.dot(h, g);
          Index part = I.add(I.dot(hy, d.dia(h, z)), I.dot(hy, d.f[h][g]));
          part = I.add(part, d.yl(hy, hg));
          E.dot[a * n + b] = E.element(part, hg);
        }
    }
  return E;
}

ExtensionValidity check_extension_tables(const ProductExtension& E) {
  ExtensionValidity v;
  std::optional<lcs::AdditiveGroup> G;
  try {
    G = E.group();
  } catch (const std::invalid_argument&) {
    return v;
  }
  v.sum_is_group = true;
  lcs::LcsValidation lv = lcs::lcs_from_table(*G, E.dot);
  v.is_lcs = lv.valid();
  if (!lv.valid()) v.violation = lv.first();

  const auto& I = E.data.I;
  const auto& H = E.data.H;
  v.iota_morphism = true;
  for (Index y = 0; y < I.size() && v.iota_morphism; ++y)
    for (Index z = 0; z < I.size() && v.iota_morphism; ++z)
      v.iota_morphism = E.add(E.iota(y), E.iota(z)) == E.iota(I.add(y, z)) &&
                        E.mul(E.iota(y), E.iota(z)) == E.iota(I.dot(y, z));
  v.pi_morphism = true;
  for (Index a = 0; a < E.size() && v.pi_morphism; ++a)
    for (Index b = 0; b < E.size() && v.pi_morphism; ++b)
      v.pi_morphism = E.pi(E.add(a, b)) == H.add(E.pi(a), E.pi(b)) && E.pi(E.mul(a, b)) == H.dot(E.pi(a), E.pi(b));
  return v;
}

LinearCycleSet extension_lcs(const ProductExtension& E) {
  lcs::LcsValidation v = E.validate();
  if (!v.valid()) throw std::invalid_argument("extension tables do not form a linear cycle set");
  return std::move(*v.lcs);
}

}  // namespace lcsext::extension
