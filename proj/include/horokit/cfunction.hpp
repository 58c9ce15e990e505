#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "horokit/gamma_expr.hpp"
#include "horokit/root_system.hpp"
#include "horokit/special_functions.hpp"

// The Harish-Chandra c-function of a restricted root system, normalized so
// c(rho) = 1, via the Gindikin-Karpelevich product over the indivisible
// positive roots:
//
//   c(lambda) = kappa * prod  2^(-l_a) Gamma(l_a)
//                            / [ Gamma(l_a/2 + m_a/4 + 1/2) Gamma(l_a/2 + m_a/4 + m_2a/2) ],
//
// with l_a = (lambda, a)/(a, a). For reduced systems the duplication formula
// collapses each factor to Gamma(l_a) / Gamma(l_a + m_a/2) up to constants,
// and for even m_a the Gamma ratios telescope to a rational function; these
// are separate evaluation routes so exactness is preserved whenever possible.
//
// The dual horospherical Radon transform scales the degree-lambda irreducible
// component of the polynomial algebra by c(lambda + rho); radon_eigenvalue
// computes that factor for lambda given in the fundamental-weight basis.

namespace horokit {

struct PoleValue {
  long order = 1;
};
struct ZeroValue {
  long order = 1;
};

class CValue {
 public:
  enum class Kind { Exact, Real, Complex, Pole, Zero };

  CValue() : v_(Rational(1)) {}
  static CValue exact(Rational r) { return CValue(std::move(r)); }
  static CValue real(double x) { return CValue(x); }
  static CValue complex(std::complex<double> z) { return CValue(z); }
  static CValue pole(long order) { return CValue(PoleValue{order}); }
  static CValue zero(long order) { return CValue(ZeroValue{order}); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_finite() const { return kind() != Kind::Pole; }

  const Rational& exact_value() const {
    if (kind() != Kind::Exact) throw std::logic_error("CValue: not exact");
    return std::get<Rational>(v_);
  }
  double real_value() const {
    switch (kind()) {
      case Kind::Exact: return to_double(std::get<Rational>(v_));
      case Kind::Real: return std::get<double>(v_);
      case Kind::Zero: return 0.0;
      default: throw std::logic_error("CValue: no real value");
    }
  }
  std::complex<double> complex_value() const {
    if (kind() == Kind::Complex) return std::get<std::complex<double>>(v_);
    return {real_value(), 0.0};
  }
  long order() const {
    if (kind() == Kind::Pole) return std::get<PoleValue>(v_).order;
    if (kind() == Kind::Zero) return std::get<ZeroValue>(v_).order;
    throw std::logic_error("CValue: not a pole/zero");
  }

  std::string to_string() const {
    switch (kind()) {
      case Kind::Exact: return format_rational(std::get<Rational>(v_));
      case Kind::Real: return format_double(std::get<double>(v_));
      case Kind::Complex: {
        auto z = std::get<std::complex<double>>(v_);
        std::string im = format_double(z.imag());
        return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + im + "i";
      }
      case Kind::Pole: return "pole(order " + std::to_string(order()) + ")";
      case Kind::Zero: return "zero(order " + std::to_string(order()) + ")";
    }
    return {};
  }

 private:
  using V = std::variant<Rational, double, std::complex<double>, PoleValue, ZeroValue>;
  explicit CValue(V v) : v_(std::move(v)) {}
  V v_;
};

enum class EvalRoute { Auto, General, Reduced, EvenMultiplicity };

/// Most specialized admissible route: even-multiplicity > reduced > general.
inline EvalRoute resolve_route(const RestrictedRootSystem& rs, EvalRoute route) {
  switch (route) {
    case EvalRoute::Auto:
      if (has_even_multiplicities(rs)) return EvalRoute::EvenMultiplicity;
      return is_reduced(rs) ? EvalRoute::Reduced : EvalRoute::General;
    case EvalRoute::Reduced:
      if (!is_reduced(rs))
        throw std::invalid_argument("reduced evaluation needs a reduced root system");
      return route;
    case EvalRoute::EvenMultiplicity:
      if (!has_even_multiplicities(rs))
        throw std::invalid_argument(
            "even-multiplicity evaluation needs a reduced system with even multiplicities");
      return route;
    default:
      return EvalRoute::General;
  }
}

/// One factor of the unreduced product, for an indivisible root with
/// multiplicities (m, m2) at pairing value l_a.
inline GammaExpr gk_term(long m, long m2, const Rational& la) {
  GammaExpr e;
  e.mul_power_of_two(-la);
  e.mul_gamma(la, 1);
  e.mul_gamma(la / 2 + Rational(m, 4) + Rational(1, 2), -1);
  e.mul_gamma(la / 2 + Rational(m, 4) + Rational(m2, 2), -1);
  return e;
}

inline GammaExpr gk_term(const RestrictedRootSystem& rs, const PositiveRoot& root,
                         const RatVec& lambda) {
  if (root.is_double)
    throw std::invalid_argument("gk_term: the product runs over indivisible roots only");
  return gk_term(root.multiplicity, root.double_multiplicity, pairing(rs, lambda, root.coords));
}

/// The product without the normalizing constant; Even route falls back to the
/// reduced Gamma-quotient form (same value, kept symbolic).
inline GammaExpr c_unnormalized(const RestrictedRootSystem& rs, const RatVec& lambda,
                                EvalRoute route = EvalRoute::Auto) {
  EvalRoute r = resolve_route(rs, route);
  GammaExpr out;
  for (const PositiveRoot* root : indivisible_positive_roots(rs)) {
    Rational la = pairing(rs, lambda, root->coords);
    if (r == EvalRoute::General) {
      out *= gk_term(root->multiplicity, root->double_multiplicity, la);
    } else {
      out.mul_gamma(la, 1);
      out.mul_gamma(la + Rational(root->multiplicity, 2), -1);
    }
  }
  return out;
}

/// Normalizing constant of the chosen route: kappa * c_unnormalized(rho) = 1.
inline GammaExpr kappa(const RestrictedRootSystem& rs, EvalRoute route = EvalRoute::Auto) {
  return c_unnormalized(rs, rho(rs), route).inverse().canonical();
}

namespace detail {

inline CValue cvalue_of(const GammaExpr& canonical_expr) {
  if (canonical_expr.is_exact_rational()) return CValue::exact(canonical_expr.exact_value());
  auto v = canonical_expr.evaluate();
  switch (v.kind) {
    case GammaExpr::Numeric::Kind::Pole: return CValue::pole(v.order);
    case GammaExpr::Numeric::Kind::Zero: return CValue::zero(v.order);
    default: return CValue::real(v.value);
  }
}

}  // namespace detail

/// c(lambda) as a canonical symbolic product (kappa included).
inline GammaExpr c_function_expr(const RestrictedRootSystem& rs, const RatVec& lambda,
                                 EvalRoute route = EvalRoute::Auto) {
  return (kappa(rs, route) * c_unnormalized(rs, lambda, route)).canonical();
}

inline CValue c_even_multiplicity(const RestrictedRootSystem& rs, const RatVec& lambda) {
  resolve_route(rs, EvalRoute::EvenMultiplicity);
  RatVec rv = rho(rs);
  Rational num = 1, den = 1;
  long pole_order = 0;
  for (const PositiveRoot* root : indivisible_positive_roots(rs)) {
    Rational la = pairing(rs, lambda, root->coords);
    Rational ra = pairing(rs, rv, root->coords);
    for (long k = 0; k < root->multiplicity / 2; ++k) {
      num *= ra + k;
      Rational d = la + k;
      if (d == 0)
        ++pole_order;
      else
        den *= d;
    }
  }
  if (pole_order > 0) return CValue::pole(pole_order);
  return CValue::exact(num / den);
}

inline CValue c_function(const RestrictedRootSystem& rs, const RatVec& lambda,
                         EvalRoute route = EvalRoute::Auto) {
  EvalRoute r = resolve_route(rs, route);
  if (r == EvalRoute::EvenMultiplicity) return c_even_multiplicity(rs, lambda);
  return detail::cvalue_of(c_function_expr(rs, lambda, r));
}

/// Numeric evaluation at a complex weight (ambient coordinates).
inline CValue c_function(const RestrictedRootSystem& rs, const ComplexVec& lambda,
                         EvalRoute route = EvalRoute::Auto) {
  EvalRoute r = resolve_route(rs, route);
  RatVec rv = rho(rs);
  if (r == EvalRoute::EvenMultiplicity) {
    std::complex<double> val = 1.0;
    long pole_order = 0;
    for (const PositiveRoot* root : indivisible_positive_roots(rs)) {
      std::complex<double> la = pairing(rs, lambda, root->coords);
      Rational ra = pairing(rs, rv, root->coords);
      for (long k = 0; k < root->multiplicity / 2; ++k) {
        std::complex<double> d = la + static_cast<double>(k);
        if (std::abs(d) <= 1e-12)
          ++pole_order;
        else
          val *= (to_double(ra) + static_cast<double>(k)) / d;
      }
    }
    if (pole_order > 0) return CValue::pole(pole_order);
    return CValue::complex(val);
  }

  auto kap = kappa(rs, r).evaluate();
  std::complex<double> log_sum = std::log(kap.value);
  long net = 0;
  int sign = 1;
  bool pole_hit = false;
  // collect (argument, +1/-1) Gamma factors per root
  auto add_arg = [&](std::complex<double> a, int sgn) {
    if (gamma_is_pole(a)) {
      pole_hit = true;
      net += sgn;
      long n = static_cast<long>(std::llround(-a.real()));
      log_sum -= static_cast<double>(sgn) * std::lgamma(static_cast<double>(n) + 1.0);
      if (n % 2 != 0) sign = -sign;  // (-1)^n per factor, sgn = +/-1
      return;
    }
    log_sum += static_cast<double>(sgn) * log_gamma(a);
  };
  for (const PositiveRoot* root : indivisible_positive_roots(rs)) {
    std::complex<double> la = pairing(rs, lambda, root->coords);
    double m = static_cast<double>(root->multiplicity);
    if (r == EvalRoute::General) {
      log_sum -= la * std::numbers::ln2;
      add_arg(la, +1);
      add_arg(la * 0.5 + m / 4.0 + 0.5, -1);
      add_arg(la * 0.5 + m / 4.0 + static_cast<double>(root->double_multiplicity) / 2.0, -1);
    } else {
      add_arg(la, +1);
      add_arg(la + m / 2.0, -1);
    }
  }
  if (net > 0) return CValue::pole(net);
  if (net < 0) return CValue::zero(-net);
  (void)pole_hit;  // removable case: the limit value accumulated above
  return CValue::complex(static_cast<double>(sign) * std::exp(log_sum));
}

inline CValue c_reduced(const RestrictedRootSystem& rs, const RatVec& lambda) {
  return c_function(rs, lambda, EvalRoute::Reduced);
}

inline CValue c_reduced(const RestrictedRootSystem& rs, const ComplexVec& lambda) {
  return c_function(rs, lambda, EvalRoute::Reduced);
}

/// Scaling factor of the dual Radon transform on the component with highest
/// restricted weight sum n_j omega_j.
inline CValue radon_eigenvalue(const RestrictedRootSystem& rs, const std::vector<long>& coeffs,
                               EvalRoute route = EvalRoute::Auto) {
  RatVec lam = weight_of(rs, coeffs);
  CValue c = c_function(rs, detail::vec_add(lam, rho(rs)), route);
  if (c.kind() == CValue::Kind::Exact) {
    const Rational& v = c.exact_value();
    if (v <= 0 || v > 1)
      throw std::logic_error("internal error: eigenvalue " + c.to_string() + " outside (0, 1]");
  } else if (c.kind() == CValue::Kind::Real) {
    double v = c.real_value();
    if (v <= 0 || v > 1 + 1e-9)
      throw std::logic_error("internal error: eigenvalue " + c.to_string() + " outside (0, 1]");
  } else {
    throw std::logic_error("internal error: eigenvalue not finite at a dominant weight");
  }
  return c;
}

struct EigenvalueRow {
  std::vector<long> coeffs;
  CValue value;
};

struct EigenvalueTable {
  std::string system;
  std::vector<EigenvalueRow> rows;
};

namespace detail {

inline void compositions(long degree, int parts, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
  if (parts == 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long k = 0; k <= degree; ++k) {
    cur.push_back(k);
    compositions(degree - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All eigenvalues up to total fundamental-weight degree max_degree, ordered by
/// degree then lexicographically.
inline EigenvalueTable eigenvalue_table(const RestrictedRootSystem& rs, long max_degree,
                                        EvalRoute route = EvalRoute::Auto) {
  if (max_degree < 0) throw std::invalid_argument("eigenvalue_table: max_degree must be >= 0");
  EigenvalueTable t;
  t.system = rs.name;
  for (long d = 0; d <= max_degree; ++d) {
    std::vector<std::vector<long>> combos;
    std::vector<long> cur;
    detail::compositions(d, rs.rank, cur, combos);
    for (auto& c : combos) t.rows.push_back({c, radon_eigenvalue(rs, c, route)});
  }
  return t;
}

/// Eigenvalue of the degree-l component on real hyperbolic n-space, as the
/// parity-split rational products (independent of the Gamma machinery).
inline CValue hyperbolic_closed_form(long n, long l) {
  if (n < 2) throw std::invalid_argument("hyperbolic_closed_form: n >= 2");
  if (l < 0) throw std::invalid_argument("hyperbolic_closed_form: l >= 0");
  if (l == 0) return CValue::exact(Rational(1));
  Rational num = 1, den = 1;
  if (n % 2 == 0) {
    for (long j = 0; j < l; ++j) {
      num *= n + l - 1 + j;
      den *= Rational(n, 2) + j;
    }
    den *= rat_pow(Rational(2), 2 * l);
  } else {
    for (long j = 1; j < l; ++j) num *= Rational(n - 1, 2) + j;
    for (long j = 0; j + 1 < l; ++j) den *= n + j;
    den *= 2;
  }
  return CValue::exact(num / den);
}

/// Ambient complex weight from coefficients over the simple roots.
inline ComplexVec complex_weight_from_root_coeffs(const RestrictedRootSystem& rs,
                                                  const std::vector<std::complex<double>>& c) {
  if (static_cast<int>(c.size()) != rs.rank)
    throw std::invalid_argument("expected " + std::to_string(rs.rank) + " coefficients");
  ComplexVec w(rs.ambient_dim, 0.0);
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.ambient_dim; ++i)
      w[i] += c[j] * to_double(rs.simple_roots[j][i]);
  return w;
}

/// Ambient rational weight from rational coefficients over the simple roots.
inline RatVec weight_from_root_coeffs(const RestrictedRootSystem& rs, const RatVec& c) {
  if (static_cast<int>(c.size()) != rs.rank)
    throw std::invalid_argument("expected " + std::to_string(rs.rank) + " coefficients");
  RatVec w(rs.ambient_dim, Rational(0));
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.ambient_dim; ++i) w[i] += c[j] * rs.simple_roots[j][i];
  return w;
}

}  // namespace horokit
