#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "horokit/rational.hpp"
#include "horokit/special_functions.hpp"

// Symbolic products  (p/q) * 2^s * pi^(k/2) * prod Gamma(a_i)^{e_i}  with
// rational arguments. This is the value domain of the c-function formulas:
// keeping the product symbolic until the end lets integer and half-integer
// arguments telescope away exactly.
//
// canonical() applies, to a fixpoint:
//   * the recursion Gamma(a) = (a-1) Gamma(a-1), pushing every argument into
//     (0, 1]; Gamma(1) is dropped, Gamma(1/2) becomes sqrt(pi);
//   * the duplication identity Gamma(a) Gamma(a+1/2) = 2^(1-2a) sqrt(pi)
//     Gamma(2a) on same-sign pairs.
// Arguments at the poles 0, -1, -2, ... are kept untouched and flagged; they
// only acquire a meaning as limits, which evaluate() classifies.

namespace horokit {

class GammaExpr {
 public:
  GammaExpr() = default;

  static GammaExpr from_rational(const Rational& r) {
    GammaExpr e;
    e.prefactor_ = r;
    return e;
  }

  static GammaExpr gamma(const Rational& arg, long exp = 1) {
    GammaExpr e;
    if (exp != 0) e.factors_[arg] = exp;
    return e;
  }

  const Rational& prefactor() const { return prefactor_; }
  const Rational& two_exponent() const { return two_exponent_; }
  long sqrt_pi_exponent() const { return sqrt_pi_exponent_; }
  const std::map<Rational, long>& gamma_factors() const { return factors_; }

  GammaExpr& mul_rational(const Rational& r) {
    if (r == 0) throw std::invalid_argument("GammaExpr: zero prefactor");
    prefactor_ *= r;
    return *this;
  }
  GammaExpr& mul_power_of_two(const Rational& e) {
    two_exponent_ += e;
    return *this;
  }
  GammaExpr& mul_sqrt_pi_power(long e) {
    sqrt_pi_exponent_ += e;
    return *this;
  }
  GammaExpr& mul_gamma(const Rational& arg, long exp = 1) {
    factors_[arg] += exp;
    if (factors_[arg] == 0) factors_.erase(arg);
    return *this;
  }

  GammaExpr& operator*=(const GammaExpr& o) {
    prefactor_ *= o.prefactor_;
    two_exponent_ += o.two_exponent_;
    sqrt_pi_exponent_ += o.sqrt_pi_exponent_;
    for (const auto& [a, e] : o.factors_) mul_gamma(a, e);
    return *this;
  }
  GammaExpr& operator/=(const GammaExpr& o) { return *this *= o.inverse(); }
  friend GammaExpr operator*(GammaExpr a, const GammaExpr& b) { return a *= b; }
  friend GammaExpr operator/(GammaExpr a, const GammaExpr& b) { return a /= b; }

  GammaExpr inverse() const {
    GammaExpr e;
    e.prefactor_ = Rational(1) / prefactor_;
    e.two_exponent_ = -two_exponent_;
    e.sqrt_pi_exponent_ = -sqrt_pi_exponent_;
    for (const auto& [a, x] : factors_) e.factors_[a] = -x;
    return e;
  }

  bool operator==(const GammaExpr& o) const {
    return prefactor_ == o.prefactor_ && two_exponent_ == o.two_exponent_ &&
           sqrt_pi_exponent_ == o.sqrt_pi_exponent_ && factors_ == o.factors_;
  }

  bool has_pole_factor() const {
    for (const auto& [a, e] : factors_)
      if (e != 0 && is_nonpositive_integer(a)) return true;
    return false;
  }

  GammaExpr canonical() const {
    GammaExpr out;
    out.prefactor_ = prefactor_;
    out.two_exponent_ = two_exponent_;
    out.sqrt_pi_exponent_ = sqrt_pi_exponent_;
    for (const auto& [arg, e] : factors_) {
      if (e == 0) continue;
      if (is_nonpositive_integer(arg)) {  // pole: leave as a flag
        out.mul_gamma(arg, e);
        continue;
      }
      Rational f = arg, shift = 1;
      while (f > 1) {
        f -= 1;
        shift *= f;
      }
      while (f <= 0) {
        shift /= f;
        f += 1;
      }
      out.prefactor_ *= rat_pow(shift, e);
      if (f == 1) continue;
      if (f == Rational(1, 2)) {
        out.sqrt_pi_exponent_ += e;
        continue;
      }
      out.mul_gamma(f, e);
    }
    // duplication merges on same-sign pairs (a, a + 1/2), smallest argument first
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [a, ea] : out.factors_) {
        if (is_nonpositive_integer(a) || a >= Rational(1, 2)) continue;
        Rational b = a + Rational(1, 2);
        auto it = out.factors_.find(b);
        if (it == out.factors_.end()) continue;
        long eb = it->second;
        if ((ea > 0) != (eb > 0)) continue;
        long t = ea > 0 ? std::min(ea, eb) : std::max(ea, eb);
        out.mul_gamma(a, -t);
        out.mul_gamma(b, -t);
        out.two_exponent_ += Rational(t) * (1 - 2 * a);
        out.sqrt_pi_exponent_ += t;
        Rational c = 2 * a;
        if (c == Rational(1, 2))
          out.sqrt_pi_exponent_ += t;
        else
          out.mul_gamma(c, t);
        changed = true;
        break;  // the map was mutated; restart the scan
      }
    }
    return out;
  }

  /// True when the expression denotes a rational number as written.
  bool is_exact_rational() const {
    return factors_.empty() && is_integer(two_exponent_) && sqrt_pi_exponent_ == 0;
  }

  Rational exact_value() const {
    if (!is_exact_rational()) throw std::logic_error("GammaExpr: not an exact rational");
    return prefactor_ * rat_pow(Rational(2), static_cast<long>(rat_num(two_exponent_)));
  }

  /// True when the expression is rational times an integer power of sqrt(pi).
  bool is_pi_exact() const { return factors_.empty() && is_integer(two_exponent_); }

  /// The (rational, k) pair with value = rational * pi^(k/2).
  std::pair<Rational, long> pi_exact_value() const {
    if (!is_pi_exact()) throw std::logic_error("GammaExpr: not pi-exact");
    return {prefactor_ * rat_pow(Rational(2), static_cast<long>(rat_num(two_exponent_))),
            sqrt_pi_exponent_};
  }

  struct Numeric {
    enum class Kind { Finite, Pole, Zero } kind;
    double value = 0.0;  // meaningful for Finite only
    long order = 0;      // pole/zero order
  };

  /// Numeric value of the expression exactly as written (no canonicalization).
  /// Gamma factors at nonpositive integers are classified as a pole or zero of
  /// the stated order; when they cancel, the finite limit of the ratio is
  /// returned.
  Numeric evaluate() const {
    long net = 0;
    for (const auto& [a, e] : factors_)
      if (is_nonpositive_integer(a)) net += e;
    if (net > 0) return {Numeric::Kind::Pole, 0.0, net};
    if (net < 0) return {Numeric::Kind::Zero, 0.0, -net};
    if (is_exact_rational()) return {Numeric::Kind::Finite, to_double(exact_value()), 0};
    double log_abs = std::log(std::abs(to_double(prefactor_)));
    int sign = prefactor_ < 0 ? -1 : 1;
    log_abs += to_double(two_exponent_) * std::numbers::ln2;
    log_abs += 0.5 * sqrt_pi_exponent_ * std::log(std::numbers::pi);
    for (const auto& [a, e] : factors_) {
      if (e == 0) continue;
      if (is_nonpositive_integer(a)) {
        // removable: Gamma(-n + eps) ~ (-1)^n / (n! eps), the eps powers cancel
        long n = static_cast<long>(rat_num(-a));
        log_abs -= e * std::lgamma(static_cast<double>(n) + 1.0);
        if ((e * n) % 2 != 0) sign = -sign;
        continue;
      }
      auto [la, s] = log_abs_gamma_signed(to_double(a));
      log_abs += e * la;
      if (s < 0 && e % 2 != 0) sign = -sign;
    }
    return {Numeric::Kind::Finite, sign * std::exp(log_abs), 0};
  }

  std::string to_string() const {
    auto fmt_exp = [](const Rational& e) {
      std::string s = format_rational(e);
      return (is_integer(e) && e >= 0) ? s : "(" + s + ")";
    };
    std::ostringstream os;
    os << format_rational(prefactor_);
    if (two_exponent_ != 0) os << " * 2^" << fmt_exp(two_exponent_);
    if (sqrt_pi_exponent_ != 0) os << " * pi^" << fmt_exp(Rational(sqrt_pi_exponent_, 2));
    for (const auto& [a, e] : factors_) {
      if (e == 0) continue;
      os << " * Gamma(" << format_rational(a) << ")";
      if (e != 1) os << "^" << fmt_exp(Rational(e));
    }
    return os.str();
  }

 private:
  Rational prefactor_ = 1;
  Rational two_exponent_ = 0;
  long sqrt_pi_exponent_ = 0;
  std::map<Rational, long> factors_;
};

/// Free-function spelling of canonicalization.
inline GammaExpr simplify(const GammaExpr& e) { return e.canonical(); }

/// "(p/q)*pi^(k/2)" rendering for pi-exact expressions, exponent reduced when even.
inline std::string format_pi_exact(const GammaExpr& e) {
  auto [pref, k] = e.pi_exact_value();
  std::string out = "(" + format_rational(pref) + ")";
  if (k == 0) return out;
  if (k % 2 == 0) return out + "*pi^(" + std::to_string(k / 2) + ")";
  return out + "*pi^(" + std::to_string(k) + "/2)";
}

}  // namespace horokit
