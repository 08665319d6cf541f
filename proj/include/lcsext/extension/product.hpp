#pragma once

#include <optional>
#include <vector>

#include "lcsext/extension/data.hpp"
#include "lcsext/lcs/additive_group.hpp"

namespace lcsext::extension {

/// I x H with the sum and product built from ExtensionData, on indices y*|H| + h.
/// The tables are always built; whether they form a linear cycle set is
/// decided separately.
struct ProductExtension {
  ExtensionData data;
  std::vector<Index> sum;
  std::vector<Index> dot;

  std::size_t size() const { return data.I.size() * data.H.size(); }
  Index element(Index y, Index h) const { return static_cast<Index>(y * data.H.size() + h); }
  Index y_part(Index b) const { return static_cast<Index>(b / data.H.size()); }
  Index h_part(Index b) const { return static_cast<Index>(b % data.H.size()); }
  Index iota(Index y) const { return element(y, 0); }
  Index pi(Index b) const { return h_part(b); }
  /// Canonical section w_h = (0,h).
  Index section(Index h) const { return element(0, h); }

  Index add(Index a, Index b) const { return sum[a * size() + b]; }
  Index mul(Index a, Index b) const { return dot[a * size() + b]; }

  /// Additive group of the sum table; throws if the sum is not a group.
  lcs::AdditiveGroup group() const;
  /// Axiom validation of the dot table.
  lcs::LcsValidation validate() const;
};

ProductExtension build_product_extension(const ExtensionData& data);

/// Validity of the built tables as an extension.
struct ExtensionValidity {
  bool sum_is_group = false;
  bool is_lcs = false;
  bool iota_morphism = false;
  bool pi_morphism = false;
  std::optional<lcs::AxiomViolation> violation;

  bool valid() const { return sum_is_group && is_lcs && iota_morphism && pi_morphism; }
};

ExtensionValidity check_extension_tables(const ProductExtension& E);

/// The built linear cycle set; throws std::invalid_argument if invalid.
LinearCycleSet extension_lcs(const ProductExtension& E);

}  // namespace lcsext::extension
