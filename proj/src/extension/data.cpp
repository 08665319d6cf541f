#include "lcsext/extension/data.hpp"

#include <stdexcept>

namespace lcsext::extension {

Table constant_table(std::size_t rows, std::size_t cols, Index value) {
  return Table(rows, std::vector<Index>(cols, value));
}

Table trivial_diamond(const LinearCycleSet& I, const LinearCycleSet& H) {
  Table t(H.size(), std::vector<Index>(I.size()));
  for (auto& row : t)
    for (Index y = 0; y < I.size(); ++y) row[y] = y;
  return t;
}

Table zero_yleft(const LinearCycleSet& I, const LinearCycleSet& H) { return constant_table(I.size(), H.size()); }

namespace {

bool has_shape(const Table& t, std::size_t rows, std::size_t cols, std::size_t bound) {
  if (t.size() != rows) return false;
  for (const auto& r : t) {
    if (r.size() != cols) return false;
    for (Index v : r)
      if (v >= bound) return false;
  }
  return true;
}

std::string tuple(std::initializer_list<Index> xs) {
  std::string s = "(";
  bool first = true;
  for (Index x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<std::string> data_violations(const ExtensionData& d) {
  const Index ni = static_cast<Index>(d.I.size()), nh = static_cast<Index>(d.H.size());
  std::vector<std::string> out;
  if (!has_shape(d.beta, nh, nh, ni)) out.push_back("beta must be an |H| x |H| table of I elements");
  if (!has_shape(d.f, nh, nh, ni)) out.push_back("f must be an |H| x |H| table of I elements");
  if (!has_shape(d.diamond, nh, ni, ni)) out.push_back("diamond must be an |H| x |I| table of I elements");
  if (!has_shape(d.yleft, ni, nh, ni)) out.push_back("yleft must be an |I| x |H| table of I elements");
  if (!out.empty()) return out;

  const auto& I = d.I;
  const auto& H = d.H;
  auto first_failure = [&](const std::string& law, auto&& check) {
    std::string w;
    if (check(w)) return;
    out.push_back(law + " fails at " + w);
  };
  first_failure("beta(h,h')+beta(h+h',h'') = beta(h',h'')+beta(h,h'+h'')", [&](std::string& w) {
    for (Index a = 0; a < nh; ++a)
      for (Index b = 0; b < nh; ++b)
        for (Index c = 0; c < nh; ++c)
          if (I.add(d.beta[a][b], d.beta[H.add(a, b)][c]) != I.add(d.beta[b][c], d.beta[a][H.add(b, c)])) {
            w = tuple({a, b, c});
            return false;
          }
    return true;
  });
  first_failure("beta(h,0) = beta(0,h) = 0", [&](std::string& w) {
    for (Index a = 0; a < nh; ++a)
      if (d.beta[a][0] != 0 || d.beta[0][a] != 0) {
        w = tuple({a});
        return false;
      }
    return true;
  });
  first_failure("beta(h,h') = beta(h',h)", [&](std::string& w) {
    for (Index a = 0; a < nh; ++a)
      for (Index b = 0; b < nh; ++b)
        if (d.beta[a][b] != d.beta[b][a]) {
          w = tuple({a, b});
          return false;
        }
    return true;
  });
  first_failure("h<>(y+y') = h<>y + h<>y'", [&](std::string& w) {
    for (Index h = 0; h < nh; ++h)
      for (Index y = 0; y < ni; ++y)
        for (Index z = 0; z < ni; ++z)
          if (d.dia(h, I.add(y, z)) != I.add(d.dia(h, y), d.dia(h, z))) {
            w = tuple({h, y, z});
            return false;
          }
    return true;
  });
  first_failure("0<>y = y", [&](std::string& w) {
    for (Index y = 0; y < ni; ++y)
      if (d.dia(0, y) != y) {
        w = tuple({y});
        return false;
      }
    return true;
  });
  first_failure("0<|h = 0", [&](std::string& w) {
    for (Index h = 0; h < nh; ++h)
      if (d.yl(0, h) != 0) {
        w = tuple({h});
        return false;
      }
    return true;
  });
  first_failure("y<|0 = 0", [&](std::string& w) {
    for (Index y = 0; y < ni; ++y)
      if (d.yl(y, 0) != 0) {
        w = tuple({y});
        return false;
      }
    return true;
  });
  first_failure("f(h,0) = f(0,h) = 0", [&](std::string& w) {
    for (Index a = 0; a < nh; ++a)
      if (d.f[a][0] != 0 || d.f[0][a] != 0) {
        w = tuple({a});
        return false;
      }
    return true;
  });
  return out;
}

ExtensionData make_extension_data(LinearCycleSet I, LinearCycleSet H, Table beta, Table f, Table diamond,
                                  Table yleft) {
  ExtensionData d{std::move(I), std::move(H), std::move(beta), std::move(f), std::move(diamond), std::move(yleft)};
  auto v = data_violations(d);
  if (!v.empty()) throw std::invalid_argument("invalid extension data: " + v.front());
  return d;
}

bool diamond_is_bijective(const ExtensionData& d) {
  for (const auto& row : d.diamond) {
    std::vector<bool> hit(d.I.size(), false);
    for (Index v : row) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

}  // namespace lcsext::extension
