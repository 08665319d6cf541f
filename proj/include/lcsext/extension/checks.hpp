#pragma once

#include <string>
#include <vector>

#include "lcsext/extension/product.hpp"

namespace lcsext::extension {

/// Outcome of one identity, checked over every tuple of its variables.
struct IdentityCheck {
  std::string key;
  std::string formula;
  /// Variable names, in witness order.
  std::vector<std::string> variables;
  bool pass = true;
  /// Lexicographically first failing tuple (empty on pass).
  std::vector<Index> witness;
};

struct CheckReport {
  std::vector<IdentityCheck> checks;

  bool pass() const;
  /// Throws std::out_of_range for an unknown key.
  const IdentityCheck& at(const std::string& key) const;
  bool has(const std::string& key) const;
  /// First failing check, or nullptr.
  const IdentityCheck* first_failure() const;
};

/// Bijectivity of y -> h<>y plus the four identities characterizing when the
/// product tables form an extension.
CheckReport check_general(const ExtensionData& d);

/// Throws HypothesisError unless h<>(y<|h'), h<>beta(h',h'') and h<>f(h',h'')
/// all lie in Z(I).
void require_central_hypothesis(const ExtensionData& d);
bool central_hypothesis_holds(const ExtensionData& d);

/// Ledger for cocycles with values in the center; checks the hypothesis first.
CheckReport check_central_cocycle(const ExtensionData& d);

/// Ledger for a trivial I written with y<|h -> y(triangle)h = h<>(y - y<|h) and
/// y^h = h^{-1}<>(y(triangle)h).  Throws std::invalid_argument if I is not trivial.
CheckReport check_trivial_ideal(const ExtensionData& d);

/// Laws on (<>, <|) alone for trivial I: the triangle, diamond and power laws.
CheckReport action_laws(const ExtensionData& d);

/// y(triangle)h = h<>(y - y<|h)
Index triangle(const ExtensionData& d, Index y, Index h);

/// The two equivalent forms of the diamond/yleft compatibility.
struct TriangleComparison {
  /// y<|(h'+h'') additive, hh'<>y = h'<>(h<>y), (y+y')<|h = y<|h + (y.y')<|h and bijectivity.
  bool hypotheses = false;
  /// (h<>y)<|(h.h') = h<>(y<|h') + h<>(y<|h)<|(h.h')
  bool yleft_form = false;
  /// y(triangle)hh' = (y(triangle)h)(triangle)h'
  bool triangle_form = false;
};

TriangleComparison compare_triangle_forms(const ExtensionData& d);

/// In the brace of a valid extension with trivial I: y(triangle)h = w_h^{-1} y w_h
/// and (w_h)^{-1}.y = h^{-1}<>y.  Throws std::invalid_argument if I is not
/// trivial or the tables are not a linear cycle set.
CheckReport sigma_nu_check(const ProductExtension& E);

/// Properties every valid extension has: the h=h'=0 instance of the
/// compatibility identity, closure of Soc(I) and Z(I) under <>, and (for
/// trivial I) y<|h = 0 for all pairs iff I lies in Soc(B).
CheckReport check_extension_properties(const ProductExtension& E);

}  // namespace lcsext::extension
