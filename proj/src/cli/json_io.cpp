#include "lcsext/cli/json_io.hpp"

#include <limits>
#include <sstream>

#include "lcsext/lcs/additive_group.hpp"

namespace lcsext::cli {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<Index> index_row(const Json& j, std::size_t size, std::size_t bound, const std::string& name) {
  if (!j.is_array() || j.size() != size)
    throw InputError(name + ": expected an array of " + std::to_string(size) + " indices");
  std::vector<Index> out;
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::uint64_t>() >= bound)
      throw InputError(name + ": entries must be integers in [0, " + std::to_string(bound) + ")");
    out.push_back(v.get<Index>());
  }
  return out;
}

}  // namespace

abelian::FiniteAbelianGroup group_from_json(const Json& j) {
  const Json& orders = field(j, "cyclic_orders");
  if (!orders.is_array()) throw InputError("cyclic_orders must be an array");
  std::vector<std::int64_t> out;
  for (const Json& v : orders) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) throw InputError("cyclic orders must be positive integers");
    out.push_back(v.get<std::int64_t>());
  }
  try {
    abelian::FiniteAbelianGroup g(out);
    if (g.size() > 1'000'000) throw InputError("group order above 10^6 is not supported");
    return g;
  } catch (const std::overflow_error&) {
    throw InputError("group order overflows");
  }
}

Json group_to_json(const abelian::FiniteAbelianGroup& g) { return Json{{"cyclic_orders", g.cyclic_orders()}}; }

lcs::AdditiveGroup additive_group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sum_table")) return lcs::AdditiveGroup::from_group(group_from_json(j));
  const Json& t = j.at("sum_table");
  if (!t.is_array() || t.empty() || t.size() > 4096) throw InputError("sum_table must have between 1 and 4096 rows");
  std::vector<Index> flat;
  for (const Json& row : t)
    for (Index v : index_row(row, t.size(), t.size(), "sum_table")) flat.push_back(v);
  try {
    return lcs::AdditiveGroup::from_table(t.size(), flat);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("sum_table: ") + e.what());
  }
}

std::vector<Index> LcsDescriptor::flat() const {
  std::vector<Index> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

LcsDescriptor lcs_descriptor_from_json(const Json& j) {
  LcsDescriptor d{additive_group_from_json(field(j, "group")), {}};
  const std::size_t n = d.group.size();
  const Json& t = field(j, "dot_table");
  if (t.is_string() && t.get<std::string>() == "trivial") {
    d.rows.assign(n, std::vector<Index>(n));
    for (auto& row : d.rows)
      for (Index b = 0; b < n; ++b) row[b] = b;
    return d;
  }
  if (!t.is_array() || t.size() != n) throw InputError("dot_table must be |A| rows or \"trivial\"");
  for (const Json& row : t) d.rows.push_back(index_row(row, n, n, "dot_table"));
  return d;
}

LinearCycleSet lcs_from_json(const Json& j) {
  LcsDescriptor d = lcs_descriptor_from_json(j);
  lcs::LcsValidation v = lcs::lcs_from_table(d.group, d.flat());
  if (!v.valid()) throw InputError("not a linear cycle set: " + lcs::axiom_name(v.first().axiom) + " fails");
  return *v.lcs;
}

LinearCycleSet lcs_or_group_from_json(const Json& j) {
  if (j.is_object() && (j.contains("cyclic_orders") || j.contains("sum_table")))
    return lcs::trivial_lcs(additive_group_from_json(j));
  return lcs_from_json(j);
}

Json lcs_to_json(const LinearCycleSet& L) {
  Json j;
  if (L.group().descriptor()) {
    j["group"] = group_to_json(*L.group().descriptor());
  } else {
    const std::size_t n = L.size();
    Json rows = Json::array();
    for (Index a = 0; a < n; ++a) rows.push_back(std::vector<Index>(L.group().sum_table().begin() + a * n,
                                                                     L.group().sum_table().begin() + (a + 1) * n));
    j["group"] = Json{{"sum_table", rows}};
  }
  j["dot_table"] = L.dot_rows();
  return j;
}

Table table_from_json(const Json& j, std::size_t rows, std::size_t cols, std::size_t bound, const std::string& name) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "zero") return extension::constant_table(rows, cols);
    if (s == "trivial" && rows > 0 && cols == bound) {
      Table t(rows, std::vector<Index>(cols));
      for (auto& row : t)
        for (Index y = 0; y < cols; ++y) row[y] = y;
      return t;
    }
    throw InputError(name + ": unknown shorthand \"" + s + "\"");
  }
  if (!j.is_array() || j.size() != rows)
    throw InputError(name + ": expected " + std::to_string(rows) + " rows");
  Table t;
  for (const Json& row : j) t.push_back(index_row(row, cols, bound, name));
  return t;
}

Json table_to_json(const Table& t) { return Json(t); }

extension::ActionPair actions_from_json(const Json& j, std::size_t i_order, std::size_t h_order) {
  return {table_from_json(field(j, "diamond"), h_order, i_order, i_order, "diamond"),
          table_from_json(field(j, "yleft"), i_order, h_order, i_order, "yleft")};
}

extension::ExtensionData data_from_json(const Json& j) {
  LinearCycleSet I = lcs_or_group_from_json(field(j, "I"));
  LinearCycleSet H = lcs_or_group_from_json(field(j, "H"));
  const std::size_t ni = I.size(), nh = H.size();
  extension::ActionPair act = actions_from_json(j, ni, nh);
  Table beta = table_from_json(field(j, "beta"), nh, nh, ni, "beta");
  Table f = table_from_json(field(j, "f"), nh, nh, ni, "f");
  return {std::move(I), std::move(H), std::move(beta), std::move(f), std::move(act.diamond), std::move(act.yleft)};
}

Json data_to_json(const extension::ExtensionData& d) {
  return Json{{"I", lcs_to_json(d.I)},       {"H", lcs_to_json(d.H)},         {"beta", d.beta},
              {"f", d.f},                    {"diamond", d.diamond},          {"yleft", d.yleft}};
}

Json report_to_json(const extension::CheckReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks)
    out.push_back(Json{{"identity", c.key},
                       {"formula", c.formula},
                       {"status", c.pass ? "pass" : "fail"},
                       {"variables", c.variables},
                       {"witness", c.witness}});
  return out;
}

Json cocycle_to_json(const extension::Cocycle& c) { return Json{{"beta", c.beta}, {"f", c.f}}; }

Json bigint_to_json(const abelian::BigInt& n) {
  if (n >= 0 && n <= abelian::BigInt(std::numeric_limits<std::int64_t>::max())) return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& v : j)
    if (v.is_structured() && !is_scalar_array(v)) return false;
  return true;
}

void render(const Json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_scalar_array(v)) {
        out << pad << k << ":\n";
        render(v, depth + 1, out);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_structured() && !is_scalar_array(v)) {
        out << pad << "-\n";
        render(v, depth + 1, out);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace lcsext::cli
