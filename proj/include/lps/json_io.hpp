// JSON (de)serialization for matrices, invariant tuples, q-polynomials, and
// formal sums of invariant tuples. Rationals travel as "num/den" strings so
// the wire format is exact.
#pragma once

#include <string>

#include <json.hpp>

#include "lps/dvr.hpp"
#include "lps/invariants.hpp"
#include "lps/qpoly.hpp"
#include "lps/action.hpp"

namespace lps {

using json = nlohmann::ordered_json;

inline std::string rational_to_string(const Q& x) {
  Q c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Q rational_from_string(const std::string& s) {
  try {
    Q x(s);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid rational: '" + s + "'");
  }
}

inline json mat_to_json(const Mat& M) {
  json rows = json::array();
  for (int i = 0; i < M.n; ++i) {
    json row = json::array();
    for (int j = 0; j < M.n; ++j) row.push_back(rational_to_string(M.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Mat mat_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("matrix: expected " + std::to_string(n) +
                                " rows");
  Mat M(n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix: expected " + std::to_string(n) +
                                  " entries per row");
    for (int jj = 0; jj < n; ++jj) {
      const json& e = row[jj];
      if (e.is_number_integer())
        M.at(i, jj) = Q(static_cast<long>(e.get<long long>()));
      else if (e.is_string())
        M.at(i, jj) = rational_from_string(e.get<std::string>());
      else
        throw std::invalid_argument("matrix entry must be integer or string");
    }
  }
  return M;
}

inline json inv_to_json(const InvTuple& t) {
  return json::array({t.k, t.s, t.r, t.d, t.m, t.n});
}

inline InvTuple inv_from_json(const json& j) {
  if (!j.is_array() || j.size() != 6)
    throw std::invalid_argument("invariant tuple: expected 6 integers");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(),
          j[3].get<int>(), j[4].get<int>(), j[5].get<int>()};
}

// q-polynomial as an object {"<exp>": coeff, ...}; half-integer exponents
// serialize as "a/2".
inline json qpoly_to_json(const QPoly& f) {
  json o = json::object();
  for (const auto& [e2, c] : f.c) {
    std::string key = (e2 % 2 == 0) ? std::to_string(e2 / 2)
                                    : std::to_string(e2) + "/2";
    o[key] = c.get_str();
  }
  return o;
}

inline QPoly qpoly_from_json(const json& j) {
  QPoly f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = it.key();
    int e2;
    auto slash = key.find('/');
    if (slash == std::string::npos)
      e2 = 2 * std::stoi(key);
    else
      e2 = std::stoi(key.substr(0, slash));
    Z c(it.value().is_string() ? Z(it.value().get<std::string>())
                               : Z(static_cast<long>(it.value().get<long long>())));
    if (c != 0) f.c[e2] = c;
  }
  return f;
}

inline json invsum_to_json(const InvSum& s) {
  json arr = json::array();
  for (const auto& [t, coeff] : s) {
    if (coeff.is_zero()) continue;
    json term = json::object();
    term["inv"] = inv_to_json(t);
    term["coeff"] = qpoly_to_json(coeff);
    term["coeff_str"] = coeff.str();
    arr.push_back(term);
  }
  return arr;
}

inline json invcount_to_json(const InvCount& s) {
  json arr = json::array();
  for (const auto& [t, c] : s) {
    if (c == 0) continue;
    json term = json::object();
    term["inv"] = inv_to_json(t);
    term["count"] = c.get_str();
    arr.push_back(term);
  }
  return arr;
}

}  // namespace lps
