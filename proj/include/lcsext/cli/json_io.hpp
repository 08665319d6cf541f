#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lcsext/cohomology/cochains.hpp"
#include "lcsext/extension/checks.hpp"
#include "lcsext/extension/classify.hpp"
#include "lcsext/lcs/linear_cycle_set.hpp"

namespace lcsext::cli {

using Json = nlohmann::ordered_json;
using extension::Index;
using extension::Table;
using lcs::LinearCycleSet;

/// Malformed or out-of-range input descriptor.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"cyclic_orders": [n1, ..., nk]}
abelian::FiniteAbelianGroup group_from_json(const Json& j);
Json group_to_json(const abelian::FiniteAbelianGroup& g);

/// {"cyclic_orders": [...]} or {"sum_table": [[...]]}
lcs::AdditiveGroup additive_group_from_json(const Json& j);

/// {"group": {...}, "dot_table": [[...]] | "trivial"} without validation of the axioms.
struct LcsDescriptor {
  lcs::AdditiveGroup group;
  std::vector<std::vector<Index>> rows;

  std::vector<Index> flat() const;
};
LcsDescriptor lcs_descriptor_from_json(const Json& j);
/// Throws InputError unless the table is a linear cycle set.
LinearCycleSet lcs_from_json(const Json& j);
/// A group descriptor is read as the trivial structure on it.
LinearCycleSet lcs_or_group_from_json(const Json& j);
Json lcs_to_json(const LinearCycleSet& L);

/// rows x cols table, or the named shorthand ("trivial", "zero").
Table table_from_json(const Json& j, std::size_t rows, std::size_t cols, std::size_t bound, const std::string& name);
Json table_to_json(const Table& t);

/// <> ("trivial" allowed) and <| ("zero" allowed) for I and H.
extension::ActionPair actions_from_json(const Json& j, std::size_t i_order, std::size_t h_order);

/// Fields I, H, beta, f, diamond, yleft; shapes and ranges are checked, the
/// construction invariants are not.
extension::ExtensionData data_from_json(const Json& j);
Json data_to_json(const extension::ExtensionData& d);

Json report_to_json(const extension::CheckReport& r);
Json cocycle_to_json(const extension::Cocycle& c);

/// Number if it fits in 64 bits, else decimal string.
Json bigint_to_json(const abelian::BigInt& n);

/// Indented key: value rendering of a JSON document.
std::string render_text(const Json& j);

}  // namespace lcsext::cli
