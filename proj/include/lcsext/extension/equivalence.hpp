#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcsext/extension/product.hpp"

namespace lcsext::extension {

/// phi : H -> I with phi(0) = 0; the equivalence is y + w_h -> y + phi(h) + w_h.
struct EquivalenceWitness {
  std::vector<Index> phi;
  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

inline constexpr std::uint64_t kDefaultMaxSearch = 1'000'000;

/// True iff y + w_h -> y + phi(h) + w_h is a morphism of linear cycle sets
/// from E1 to E2 (it then commutes with iota and pi by construction).
bool is_equivalence_map(const ProductExtension& E1, const ProductExtension& E2, const std::vector<Index>& phi);

/// Lexicographically least phi realizing an equivalence, if any.  Differing
/// diamond or yleft tables give std::nullopt at once.  Throws
/// std::invalid_argument if I or H differ, GuardError if |I|^(|H|-1) exceeds
/// max_search.  Both inputs are expected to be valid extensions.
std::optional<EquivalenceWitness> extensions_equivalent(const ProductExtension& E1, const ProductExtension& E2,
                                                        std::uint64_t max_search = kDefaultMaxSearch);

}  // namespace lcsext::extension
