#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "horokit/root_system.hpp"

// JSON root-system spec files:
//   { "name": ..., "type": "A"|"B"|"C"|"D"|"BC"|"explicit", "rank": n,
//     "multiplicities": {"short": m, "long": m, "double": m},
//     "simple_roots": [["p/q", ...], ...],        (explicit)
//     "gram": [["p/q", ...], ...],                 (optional)
//     "positive_roots": [{"coords": [...], "multiplicity": m}, ...] (explicit, optional) }
// Rational entries are "p/q" strings or plain integers.

namespace horokit {

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ValidationError(path + ": expected a \"p/q\" string or integer");
}

inline RatVec json_rat_vec(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array");
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(json_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline RatMat json_rat_mat(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array of arrays");
  RatMat m;
  for (std::size_t i = 0; i < j.size(); ++i)
    m.push_back(json_rat_vec(j[i], path + "[" + std::to_string(i) + "]"));
  return m;
}

inline long json_positive_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    throw ValidationError(path + ": expected a positive integer");
  return static_cast<long>(j.get<long long>());
}

inline std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace detail

inline RootSystemSpec parse_root_system_spec(const nlohmann::json& j) {
  using nlohmann::json;
  if (!j.is_object()) throw ValidationError("$: expected an object");
  RootSystemSpec spec;
  if (!j.contains("name") || !j["name"].is_string())
    throw ValidationError("name: required string");
  spec.name = j["name"].get<std::string>();
  if (!j.contains("type") || !j["type"].is_string())
    throw ValidationError("type: required string");
  spec.type = j["type"].get<std::string>();
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw ValidationError("rank: required integer");
  spec.rank = j["rank"].get<int>();
  static const char* known[] = {"name", "type",         "rank",
                                "multiplicities", "simple_roots", "gram",
                                "positive_roots"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw ValidationError(it.key() + ": unknown field");
  }
  if (j.contains("multiplicities")) {
    const auto& m = j["multiplicities"];
    if (!m.is_object()) throw ValidationError("multiplicities: expected an object");
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (it.key() == "short")
        spec.m_short = detail::json_positive_int(it.value(), "multiplicities.short");
      else if (it.key() == "long")
        spec.m_long = detail::json_positive_int(it.value(), "multiplicities.long");
      else if (it.key() == "double")
        spec.m_double = detail::json_positive_int(it.value(), "multiplicities.double");
      else
        throw ValidationError("multiplicities." + it.key() + ": unknown class");
    }
  }
  if (j.contains("simple_roots"))
    spec.simple_roots = detail::json_rat_mat(j["simple_roots"], "simple_roots");
  if (j.contains("gram")) spec.gram = detail::json_rat_mat(j["gram"], "gram");
  if (j.contains("positive_roots")) {
    const auto& arr = j["positive_roots"];
    if (!arr.is_array()) throw ValidationError("positive_roots: expected an array");
    std::vector<RootSystemSpec::ExplicitRoot> roots;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "positive_roots[" + std::to_string(i) + "]";
      const auto& e = arr[i];
      if (!e.is_object()) throw ValidationError(path + ": expected an object");
      RootSystemSpec::ExplicitRoot er;
      if (!e.contains("coords")) throw ValidationError(path + ".coords: required");
      er.coords = detail::json_rat_vec(e["coords"], path + ".coords");
      if (!e.contains("multiplicity")) throw ValidationError(path + ".multiplicity: required");
      er.multiplicity = detail::json_positive_int(e["multiplicity"], path + ".multiplicity");
      roots.push_back(std::move(er));
    }
    spec.positive_roots = std::move(roots);
  }
  return spec;
}

/// Loads and validates a root-system spec file.
inline RestrictedRootSystem load_root_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ":" + std::to_string(detail::line_of_offset(text, e.byte)) +
                          ": " + e.what());
  }
  try {
    auto rs = build_root_system(parse_root_system_spec(j));
    rs.catalog_provenance = "file";
    return rs;
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

/// Serializes a built system as an "explicit" spec that reloads identically.
inline nlohmann::json root_system_to_spec_json(const RestrictedRootSystem& rs) {
  nlohmann::json j;
  j["name"] = rs.name;
  j["type"] = "explicit";
  j["rank"] = rs.rank;
  auto vec_json = [](const RatVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
  };
  j["simple_roots"] = nlohmann::json::array();
  for (const auto& s : rs.simple_roots) j["simple_roots"].push_back(vec_json(s));
  j["gram"] = nlohmann::json::array();
  for (const auto& row : rs.gram) j["gram"].push_back(vec_json(row));
  j["positive_roots"] = nlohmann::json::array();
  for (const auto& pr : rs.positive_roots) {
    nlohmann::json e;
    e["coords"] = vec_json(pr.coords);
    e["multiplicity"] = pr.multiplicity;
    j["positive_roots"].push_back(e);
  }
  return j;
}

}  // namespace horokit
