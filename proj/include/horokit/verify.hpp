#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "horokit/cfunction.hpp"
#include "horokit/rank_one.hpp"
#include "horokit/rep_model.hpp"
#include "horokit/table_io.hpp"

// Cross-checks of the Gamma-product c-function against the two independent
// oracles: the horospherical integral (rank-one model groups) and the
// finite-dimensional projection plus its geodesic asymptotics (real
// hyperbolic plane). Each check becomes one report row; complex comparisons
// contribute a row per component with the complex modulus as the error.

namespace horokit {

struct VerifyCase {
  std::string oracle;
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double abs_err = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  long max_l = 5;
  std::optional<double> tol;  // per-oracle default when unset
  QuadratureSpec quadrature;
};

/// Which rank-one model group realizes this root system: multiplicity 1 is
/// the real hyperbolic plane, multiplicity 2 is hyperbolic 3-space.
inline std::optional<RankOneGroup> rank_one_model(const RestrictedRootSystem& rs) {
  if (rs.rank != 1 || rs.positive_roots.size() != 1) return std::nullopt;
  const PositiveRoot& r = rs.positive_roots[0];
  if (r.divisible || r.is_double) return std::nullopt;
  if (r.multiplicity == 1) return RankOneGroup::SL2R;
  if (r.multiplicity == 2) return RankOneGroup::SL2C;
  return std::nullopt;
}

namespace detail {

inline std::complex<double> cvalue_as_complex(const CValue& v) {
  switch (v.kind()) {
    case CValue::Kind::Exact:
      return {to_double(v.exact_value()), 0.0};
    case CValue::Kind::Real:
      return {v.real_value(), 0.0};
    case CValue::Kind::Complex:
      return v.complex_value();
    default:
      throw std::domain_error("verify: c-function value is not finite");
  }
}

}  // namespace detail

/// c-function vs the horospherical integral on the model group underlying the
/// space. Error for spaces that are not rank-one model groups.
inline VerifyReport verify_iwasawa(const RestrictedRootSystem& rs, const VerifyOptions& opt = {}) {
  auto grp = rank_one_model(rs);
  if (!grp)
    throw std::invalid_argument(
        "integral oracle: space must be a rank-one model group "
        "(one positive root of multiplicity 1 or 2)");
  double tol = opt.tol.value_or(1e-6);
  VerifyReport report;
  auto add = [&](std::string name, double expected, double actual, double err) {
    report.cases.push_back({"iwasawa", std::move(name), expected, actual, err, err <= tol});
  };

  {
    std::complex<double> v = cbar_integral(*grp, rank_one_rho_coeff(*grp), opt.quadrature);
    add("cbar(rho) = 1", 1.0, v.real(), std::abs(v - 1.0));
  }

  const RatVec& alpha = rs.positive_roots[0].coords;
  for (const Rational& lc :
       {Rational(3, 4), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)}) {
    RatVec lam(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) lam[i] = lc * alpha[i];
    double expected = cbar_integral(*grp, to_double(lc), opt.quadrature).real();
    double actual = detail::cvalue_as_complex(c_function(rs, lam)).real();
    add("lambda = " + format_rational(lc), expected, actual, std::abs(expected - actual));
  }

  const std::pair<std::complex<double>, std::string> complex_cases[] = {
      {{1.0, 1.0}, "lambda = 1+1i"}, {{2.0, 0.5}, "lambda = 2+0.5i"}};
  for (const auto& [lc, label] : complex_cases) {
    ComplexVec lam(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) lam[i] = lc * to_double(alpha[i]);
    std::complex<double> expected = cbar_integral(*grp, lc, opt.quadrature);
    std::complex<double> actual = detail::cvalue_as_complex(c_function(rs, lam));
    double err = std::abs(expected - actual);
    add(label + " (re)", expected.real(), actual.real(), err);
    add(label + " (im)", expected.imag(), actual.imag(), err);
  }
  return report;
}

namespace detail {

inline void require_sl2r(const RestrictedRootSystem& rs, const char* oracle) {
  auto grp = rank_one_model(rs);
  if (!grp || *grp != RankOneGroup::SL2R)
    throw std::invalid_argument(std::string(oracle) +
                                " oracle: space must be the real hyperbolic plane "
                                "(one positive root of multiplicity 1)");
}

}  // namespace detail

/// Radon eigenvalue vs the exact cos^2 from the degree-2l polynomial model.
inline VerifyReport verify_rep(const RestrictedRootSystem& rs, const VerifyOptions& opt = {}) {
  detail::require_sl2r(rs, "representation");
  double tol = opt.tol.value_or(1e-10);
  VerifyReport report;
  for (long l = 0; l <= opt.max_l; ++l) {
    RepModel m = build_rep_model(l);
    double expected = rep_cos2(m);
    double actual = detail::cvalue_as_complex(radon_eigenvalue(rs, {l})).real();
    double err = std::abs(expected - actual);
    report.cases.push_back(
        {"rep", "l = " + std::to_string(l), expected, actual, err, err <= tol});
  }
  return report;
}

/// Geodesic asymptotics of the spherical matrix coefficient vs the same cos^2.
inline VerifyReport verify_asymptotic(const RestrictedRootSystem& rs,
                                      const VerifyOptions& opt = {}) {
  detail::require_sl2r(rs, "asymptotic");
  double tol = opt.tol.value_or(1e-6);
  VerifyReport report;
  for (long l = 0; l <= opt.max_l; ++l) {
    RepModel m = build_rep_model(l);
    double expected = rep_cos2(m);
    double actual = asymptotic_coefficient(m).value;
    double err = std::abs(expected - actual);
    report.cases.push_back(
        {"asymptotic", "l = " + std::to_string(l), expected, actual, err, err <= tol});
  }
  return report;
}

/// Union of every oracle that applies to the space.
inline VerifyReport verify_all(const RestrictedRootSystem& rs, const VerifyOptions& opt = {}) {
  auto grp = rank_one_model(rs);
  if (!grp)
    throw std::invalid_argument(
        "no verification oracle applies to this space; oracles exist for the rank-one "
        "model groups (one positive root of multiplicity 1 or 2)");
  VerifyReport report = verify_iwasawa(rs, opt);
  if (*grp == RankOneGroup::SL2R) {
    VerifyReport rep = verify_rep(rs, opt);
    for (auto& c : rep.cases) report.cases.push_back(std::move(c));
    VerifyReport asym = verify_asymptotic(rs, opt);
    for (auto& c : asym.cases) report.cases.push_back(std::move(c));
  }
  return report;
}

inline nlohmann::json verify_report_json(const VerifyReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : report.cases)
    arr.push_back({{"oracle", c.oracle},
                   {"case", c.name},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"abs_err", c.abs_err},
                   {"pass", c.pass}});
  return arr;
}

inline std::string verify_report_csv(const VerifyReport& report) {
  std::string out = "oracle;case;expected;actual;abs_err;pass\n";
  for (const auto& c : report.cases) {
    out += c.oracle + ";" + c.name + ";" + format_double_17(c.expected) + ";" +
           format_double_17(c.actual) + ";" + format_double_17(c.abs_err) + ";" +
           (c.pass ? "true" : "false") + "\n";
  }
  return out;
}

/// One PASS/FAIL line per case.
inline std::string verify_report_text(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.cases) {
    out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.oracle + "  " + c.name +
           ": expected " + format_double(c.expected) + ", actual " + format_double(c.actual) +
           ", abs_err " + format_double(c.abs_err) + "\n";
  }
  return out;
}

}  // namespace horokit
