#pragma once

#include <functional>
#include <vector>

#include "lcsext/extension/product.hpp"
#include "lcsext/lcs/structure.hpp"

namespace lcsext::extension {

/// A short exact sequence 0 -> I -> B -> H -> 0 given by index maps.
struct AbstractExtension {
  LinearCycleSet I;
  LinearCycleSet B;
  LinearCycleSet H;
  /// iota[y] in B
  std::vector<Index> iota;
  /// pi[b] in H
  std::vector<Index> pi;
};

/// Throws std::invalid_argument unless iota is an injective morphism, pi a
/// surjective morphism and image(iota) = ker(pi).
void validate_exact(const AbstractExtension& E);

/// (beta, <>, <|, f) read off through a section s with s(0) = 0:
///   iota(y + y' + beta(h,h')) + s(h+h') = iota(y) + s(h) + iota(y') + s(h'),
///   h<>y = s(h).y,  y<|h = y.s(h) - s(h),  s(h).s(h') = f(h,h') + s(h.h').
/// Throws std::invalid_argument if the sequence is not exact or s is not a
/// section with s(0) = 0.
ExtensionData extract_data(const AbstractExtension& E, const std::vector<Index>& section);

/// Same, for product tables (validity is checked).
AbstractExtension as_abstract(const ProductExtension& P);

/// Calls visit(s) for every section with s(0) = 0, in lexicographic order.
/// Returns the number visited.
std::size_t for_each_section(const AbstractExtension& E, const std::function<void(const std::vector<Index>&)>& visit);

/// The extension 0 -> J -> B -> B/J -> 0 of an ideal J of B, with J and B/J
/// indexed by their least elements.  Throws std::invalid_argument if J is not
/// an ideal.
AbstractExtension ideal_extension(const LinearCycleSet& B, const lcs::Substructure& J);

}  // namespace lcsext::extension
