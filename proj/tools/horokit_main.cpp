// Command-line front end: catalog browsing, root/weight/rho inspection,
// c-function evaluation, eigenvalue tables and oracle verification.
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "horokit/cfunction.hpp"
#include "horokit/root_system.hpp"
#include "horokit/spec_io.hpp"
#include "horokit/table_io.hpp"
#include "horokit/verify.hpp"

namespace fs = std::filesystem;
using namespace horokit;

namespace {

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos ||
         (s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0);
}

/// Catalog lookup order: HOROKIT_CATALOG_DIR spec files shadow built-in names.
RestrictedRootSystem load_space(const std::string& selector) {
  if (!looks_like_path(selector)) {
    if (const char* dir = std::getenv("HOROKIT_CATALOG_DIR")) {
      fs::path p = fs::path(dir) / (selector + ".json");
      if (fs::exists(p)) return load_root_system_file(p.string());
    }
    try {
      return catalog_space(selector);
    } catch (const CatalogError&) {
      if (fs::exists(selector)) return load_root_system_file(selector);
      throw;
    }
  }
  return load_root_system_file(selector);
}

std::string format_rat_vec(const RatVec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + "]";
}

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
}

/// "a", "a+bi", "a-bi", "bi"; exponent signs (1e-3) are not separators.
std::complex<double> parse_complex_literal(const std::string& s) {
  auto bad = [&]() -> std::complex<double> {
    throw std::invalid_argument("bad complex literal '" + s + "' (expected a, bi or a+bi)");
  };
  if (s.empty()) return bad();
  auto to_num = [&](std::string t) {
    if (t == "+" || t == "-") t += "1";
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      bad();
    }
    if (pos != t.size()) bad();
    return v;
  };
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  if (s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    if (split == std::string::npos) return {0.0, to_num(body)};
    return {to_num(s.substr(0, split)), to_num(body.substr(split))};
  }
  if (split != std::string::npos) return bad();
  return {to_num(s), 0.0};
}

struct ParsedLambda {
  std::optional<RatVec> exact;  // ambient coordinates when all coefficients are rational
  ComplexVec numeric;
};

/// Lambda from simple-root-basis coefficients, rational literals staying exact.
ParsedLambda parse_lambda_root_basis(const RestrictedRootSystem& rs, const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != static_cast<std::size_t>(rs.rank))
    throw std::invalid_argument("expected " + std::to_string(rs.rank) +
                                " comma-separated coefficients, got " +
                                std::to_string(parts.size()));
  std::vector<Rational> rat(parts.size());
  bool all_rational = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      rat[i] = parse_rational(parts[i]);
    } catch (const std::invalid_argument&) {
      all_rational = false;
      break;
    }
  }
  ParsedLambda out;
  std::size_t dim = rs.simple_roots[0].size();
  if (all_rational) {
    RatVec lam(dim, Rational(0));
    for (std::size_t j = 0; j < rat.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) lam[i] += rat[j] * rs.simple_roots[j][i];
    out.exact = std::move(lam);
    return out;
  }
  std::vector<std::complex<double>> coeff(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      coeff[i] = std::complex<double>(to_double(parse_rational(parts[i])), 0.0);
    } catch (const std::invalid_argument&) {
      coeff[i] = parse_complex_literal(parts[i]);
    }
  }
  out.numeric.assign(dim, {0.0, 0.0});
  for (std::size_t j = 0; j < coeff.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i)
      out.numeric[i] += coeff[j] * to_double(rs.simple_roots[j][i]);
  return out;
}

std::string format_complex(const std::complex<double>& z) {
  std::string out = format_double(z.real());
  out += (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
  return out;
}

// ---- subcommand bodies ------------------------------------------------------

int run_catalog(const std::string& format) {
  struct Row {
    std::string key, description;
  };
  std::vector<Row> rows;
  if (const char* dir = std::getenv("HOROKIT_CATALOG_DIR")) {
    std::vector<fs::path> files;
    if (fs::is_directory(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) rows.push_back({p.stem().string(), "spec file " + p.string()});
  }
  for (const auto& e : catalog_entries()) rows.push_back({e.key, e.description});
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back({{"key", r.key}, {"description", r.description}});
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "key;description\n";
    for (const auto& r : rows) std::cout << r.key << ";" << r.description << "\n";
  } else {
    for (const auto& r : rows) std::cout << r.key << "  " << r.description << "\n";
  }
  return 0;
}

int run_roots(const RestrictedRootSystem& rs, const std::string& format) {
  if (format == "json") {
    std::cout << root_system_to_spec_json(rs).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "coords;simple_coeffs;multiplicity;double_multiplicity\n";
    for (const auto& r : rs.positive_roots) {
      std::string coords;
      for (std::size_t i = 0; i < r.coords.size(); ++i)
        coords += (i ? "," : "") + format_rational(r.coords[i]);
      std::cout << coords << ";" << join_longs(r.simple_coeffs) << ";" << r.multiplicity << ";"
                << r.double_multiplicity << "\n";
    }
  } else {
    std::cout << "name: " << rs.name << "\nrank: " << rs.rank
              << "\nambient dimension: " << rs.ambient_dim << "\npositive roots:\n";
    for (const auto& r : rs.positive_roots) {
      std::cout << "  " << format_rat_vec(r.coords) << "  coeffs " << join_longs(r.simple_coeffs)
                << "  mult " << r.multiplicity;
      if (r.divisible) std::cout << "  divisible";
      if (r.is_double) std::cout << "  double";
      std::cout << "\n";
    }
  }
  return 0;
}

int run_weights(const RestrictedRootSystem& rs, const std::string& format) {
  auto omegas = fundamental_weights(rs);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : omegas) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : w) row.push_back(format_rational(x));
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "index;coords\n";
    for (std::size_t j = 0; j < omegas.size(); ++j) {
      std::string coords;
      for (std::size_t i = 0; i < omegas[j].size(); ++i)
        coords += (i ? "," : "") + format_rational(omegas[j][i]);
      std::cout << (j + 1) << ";" << coords << "\n";
    }
  } else {
    for (std::size_t j = 0; j < omegas.size(); ++j)
      std::cout << "omega_" << (j + 1) << " = " << format_rat_vec(omegas[j]) << "\n";
  }
  return 0;
}

int run_rho(const RestrictedRootSystem& rs, const std::string& format) {
  RatVec r = rho(rs);
  if (format == "json") {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(format_rational(x));
    std::cout << row.dump(2) << "\n";
  } else if (format == "csv") {
    std::string coords;
    for (std::size_t i = 0; i < r.size(); ++i) coords += (i ? "," : "") + format_rational(r[i]);
    std::cout << "coords\n" << coords << "\n";
  } else {
    std::cout << "rho = " << format_rat_vec(r) << "\n";
  }
  return 0;
}

int run_cfn(const RestrictedRootSystem& rs, const std::string& coeffs, const std::string& format) {
  ParsedLambda lam = parse_lambda_root_basis(rs, coeffs);
  CValue v = lam.exact ? c_function(rs, *lam.exact) : c_function(rs, lam.numeric);
  std::optional<std::string> symbolic;
  if (lam.exact && v.kind() != CValue::Kind::Exact && v.kind() != CValue::Kind::Pole &&
      resolve_route(rs, EvalRoute::Auto) != EvalRoute::EvenMultiplicity) {
    GammaExpr e = c_function_expr(rs, *lam.exact, resolve_route(rs, EvalRoute::Auto));
    if (e.is_pi_exact()) symbolic = format_pi_exact(e);
  }

  std::string kind;
  switch (v.kind()) {
    case CValue::Kind::Exact: kind = "exact"; break;
    case CValue::Kind::Real: kind = "real"; break;
    case CValue::Kind::Complex: kind = "complex"; break;
    case CValue::Kind::Pole: kind = "pole"; break;
    case CValue::Kind::Zero: kind = "zero"; break;
  }
  if (format == "json") {
    nlohmann::json j{{"kind", kind}};
    if (v.kind() == CValue::Kind::Exact) j["exact"] = format_rational(v.exact_value());
    if (symbolic) j["symbolic"] = *symbolic;
    if (v.kind() == CValue::Kind::Pole) {
      j["order"] = v.order();
    } else if (v.kind() == CValue::Kind::Complex) {
      j["re"] = v.complex_value().real();
      j["im"] = v.complex_value().imag();
    } else {
      j["float"] = v.real_value();
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "kind;exact;re;im;order\n" << kind << ";";
    if (v.kind() == CValue::Kind::Exact) std::cout << format_rational(v.exact_value());
    std::cout << ";";
    if (v.kind() == CValue::Kind::Complex)
      std::cout << format_double_17(v.complex_value().real()) << ";"
                << format_double_17(v.complex_value().imag());
    else if (v.kind() == CValue::Kind::Pole)
      std::cout << ";";
    else
      std::cout << format_double_17(v.real_value()) << ";" << format_double_17(0.0);
    std::cout << ";" << (v.kind() == CValue::Kind::Pole || v.kind() == CValue::Kind::Zero
                             ? std::to_string(v.order())
                             : "")
              << "\n";
  } else {
    std::cout << "kind: " << kind << "\n";
    switch (v.kind()) {
      case CValue::Kind::Exact:
        std::cout << "exact: " << format_rational(v.exact_value()) << "\n"
                  << "float: " << format_double(v.real_value()) << "\n";
        break;
      case CValue::Kind::Real:
        if (symbolic) std::cout << "symbolic: " << *symbolic << "\n";
        std::cout << "float: " << format_double(v.real_value()) << "\n";
        break;
      case CValue::Kind::Complex:
        std::cout << "float: " << format_complex(v.complex_value()) << "\n";
        break;
      case CValue::Kind::Pole:
      case CValue::Kind::Zero:
        std::cout << "order: " << v.order() << "\n";
        break;
    }
  }
  return 0;
}

int run_eigen(const RestrictedRootSystem& rs, const std::vector<long>& coeffs,
              const std::string& format) {
  if (coeffs.size() != static_cast<std::size_t>(rs.rank))
    throw std::invalid_argument("expected " + std::to_string(rs.rank) +
                                " weight coefficients, got " + std::to_string(coeffs.size()));
  CValue v = radon_eigenvalue(rs, coeffs);
  bool exact = v.kind() == CValue::Kind::Exact;
  if (format == "json") {
    nlohmann::json j{{"coeffs", coeffs}, {"float", v.real_value()}};
    j["exact"] = exact ? nlohmann::json(format_rational(v.exact_value())) : nlohmann::json();
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "coeffs;exact;float\n"
              << join_longs(coeffs) << ";" << (exact ? format_rational(v.exact_value()) : "")
              << ";" << format_double_17(v.real_value()) << "\n";
  } else {
    if (exact) std::cout << "exact: " << format_rational(v.exact_value()) << "\n";
    std::cout << "float: " << format_double(v.real_value()) << "\n";
  }
  return 0;
}

int run_table(const RestrictedRootSystem& rs, long max_degree, const std::string& format) {
  if (max_degree < 0) throw std::invalid_argument("--max must be >= 0");
  EigenvalueTable t = eigenvalue_table(rs, max_degree);
  if (format == "json") {
    std::cout << eigenvalue_table_json(t).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << eigenvalue_table_csv(t);
  } else {
    std::cout << "coeffs  exact  float\n";
    for (const auto& row : t.rows) {
      bool exact = row.value.kind() == CValue::Kind::Exact;
      std::cout << join_longs(row.coeffs) << "  "
                << (exact ? format_rational(row.value.exact_value()) : "-") << "  "
                << format_double(row.value.real_value()) << "\n";
    }
  }
  return 0;
}

int run_verify(const RestrictedRootSystem& rs, const std::string& oracle, const VerifyOptions& opt,
               const std::string& format) {
  VerifyReport report;
  if (oracle == "iwasawa")
    report = verify_iwasawa(rs, opt);
  else if (oracle == "rep")
    report = verify_rep(rs, opt);
  else if (oracle == "asymptotic")
    report = verify_asymptotic(rs, opt);
  else
    report = verify_all(rs, opt);
  if (format == "json")
    std::cout << verify_report_json(report).dump(2) << "\n";
  else if (format == "csv")
    std::cout << verify_report_csv(report);
  else
    std::cout << verify_report_text(report);
  return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric horospherical Radon eigenvalues on symmetric spaces"};
  app.require_subcommand(1);

  std::string space, format = "pretty";
  std::string cfn_coeffs, oracle = "all";
  std::vector<long> omega_coeffs;
  long max_degree = 4, max_l = 5;
  double tol = -1.0;
  long nodes = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
  };
  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", space, "catalog name or spec-file path")->required();
  };

  CLI::App* cat = app.add_subcommand("catalog", "list known spaces");
  add_format(cat);

  CLI::App* roots = app.add_subcommand("roots", "positive restricted roots and multiplicities");
  add_space(roots);
  add_format(roots);

  CLI::App* weights = app.add_subcommand("weights", "fundamental restricted weights");
  add_space(weights);
  add_format(weights);

  CLI::App* rho_cmd = app.add_subcommand("rho", "half-sum of positive roots with multiplicities");
  add_space(rho_cmd);
  add_format(rho_cmd);

  CLI::App* cfn = app.add_subcommand("cfn", "Harish-Chandra c-function at a weight");
  add_space(cfn);
  cfn->add_option("--coeffs-root", cfn_coeffs,
                  "lambda in the simple-root basis; rational or a+bi entries")
      ->required();
  add_format(cfn);

  CLI::App* eigen = app.add_subcommand("eigen", "Radon eigenvalue at a dominant weight");
  add_space(eigen);
  eigen->add_option("--coeffs-omega,--coeffs", omega_coeffs,
                    "nonnegative integers in the fundamental-weight basis")
      ->required()
      ->delimiter(',');
  add_format(eigen);

  CLI::App* table = app.add_subcommand("table", "eigenvalue table through a total degree");
  add_space(table);
  table->add_option("--max", max_degree, "largest total degree")->capture_default_str();
  add_format(table);

  CLI::App* verify = app.add_subcommand("verify", "cross-check against independent oracles");
  add_space(verify);
  verify->add_option("--oracle", oracle, "which oracle to run")
      ->check(CLI::IsMember({"iwasawa", "rep", "asymptotic", "all"}))
      ->capture_default_str();
  verify->add_option("--max-l,--max", max_l, "largest weight multiple for rep/asymptotic")
      ->capture_default_str();
  verify->add_option("--tol", tol, "absolute tolerance (default per oracle)");
  verify->add_option("--nodes", nodes, "quadrature node budget");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cat)) return run_catalog(format);
    RestrictedRootSystem rs = load_space(space);
    if (app.got_subcommand(roots)) return run_roots(rs, format);
    if (app.got_subcommand(weights)) return run_weights(rs, format);
    if (app.got_subcommand(rho_cmd)) return run_rho(rs, format);
    if (app.got_subcommand(cfn)) return run_cfn(rs, cfn_coeffs, format);
    if (app.got_subcommand(eigen)) return run_eigen(rs, omega_coeffs, format);
    if (app.got_subcommand(table)) return run_table(rs, max_degree, format);
    if (app.got_subcommand(verify)) {
      VerifyOptions opt;
      opt.max_l = max_l;
      if (tol >= 0.0) opt.tol = tol;
      if (nodes > 0) opt.quadrature.node_budget = static_cast<int>(nodes);
      return run_verify(rs, oracle, opt, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
