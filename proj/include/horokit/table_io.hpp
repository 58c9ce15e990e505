#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "horokit/cfunction.hpp"

// EigenvalueTable serialization.
//   JSON: {"system": ..., "rows": [{"coeffs": [..], "exact": "p/q"|null, "float": x}, ..]}
//   CSV:  header "coeffs;exact;float", coeffs comma-joined, empty exact when
//         only a float is known, floats printed with 17 significant digits.

namespace horokit {

inline std::string format_double_17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline nlohmann::json eigenvalue_table_json(const EigenvalueTable& t) {
  nlohmann::json j;
  j["system"] = t.system;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r;
    r["coeffs"] = row.coeffs;
    if (row.value.kind() == CValue::Kind::Exact)
      r["exact"] = format_rational(row.value.exact_value());
    else
      r["exact"] = nullptr;
    r["float"] = row.value.real_value();
    j["rows"].push_back(r);
  }
  return j;
}

inline std::string eigenvalue_table_csv(const EigenvalueTable& t) {
  std::ostringstream os;
  os << "coeffs;exact;float\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.coeffs.size(); ++i)
      os << (i ? "," : "") << row.coeffs[i];
    os << ";";
    if (row.value.kind() == CValue::Kind::Exact) os << format_rational(row.value.exact_value());
    os << ";" << format_double_17(row.value.real_value()) << "\n";
  }
  return os.str();
}

struct ParsedTableRow {
  std::vector<long> coeffs;
  std::optional<std::string> exact;
  double value = 0.0;
};

struct ParsedTable {
  std::string system;  // empty for CSV, which carries no system column
  std::vector<ParsedTableRow> rows;
};

inline ParsedTable parse_eigenvalue_table_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ParsedTable t;
  t.system = j.at("system").get<std::string>();
  for (const auto& r : j.at("rows")) {
    ParsedTableRow row;
    row.coeffs = r.at("coeffs").get<std::vector<long>>();
    if (!r.at("exact").is_null()) row.exact = r.at("exact").get<std::string>();
    row.value = r.at("float").get<double>();
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline ParsedTable parse_eigenvalue_table_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "coeffs;exact;float")
    throw std::invalid_argument("eigenvalue CSV: bad header");
  ParsedTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto p1 = line.find(';');
    auto p2 = line.find(';', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw std::invalid_argument("eigenvalue CSV: expected 3 columns");
    ParsedTableRow row;
    std::istringstream cs(line.substr(0, p1));
    std::string tok;
    while (std::getline(cs, tok, ',')) row.coeffs.push_back(std::stol(tok));
    std::string ex = line.substr(p1 + 1, p2 - p1 - 1);
    if (!ex.empty()) row.exact = ex;
    row.value = std::stod(line.substr(p2 + 1));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace horokit
