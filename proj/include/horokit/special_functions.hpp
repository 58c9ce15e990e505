#pragma once

#include <cmath>
#include <complex>
#include <numbers>

// log Gamma on the complex plane. Real arguments go through std::lgamma; for
// complex ones we use the Lanczos approximation (g = 7, 9 terms), which is
// accurate to ~1e-14 relative on the half-plane Re z >= 1/2, extended by the
// reflection formula. Arguments at the poles 0, -1, -2, ... are the caller's
// problem; see gamma_is_pole below.

namespace horokit {

namespace detail {

inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

inline std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  // valid for Re z >= 0.5; z is shifted internally by 1 (Gamma(z) = Gamma(1+x)/x form)
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kLanczosG + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;  // log(2 pi)/2
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

/// True when z sits (within tol) on a pole of Gamma.
inline bool gamma_is_pole(std::complex<double> z, double tol = 1e-12) {
  double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) <= tol && std::abs(z.imag()) <= tol;
}

/// Principal branch of log Gamma for real arguments: log|Gamma(x)| plus sign.
/// Returned as (log_abs, sign in {+1,-1}).
inline std::pair<double, int> log_abs_gamma_signed(double x) {
  int sign = 1;
  if (x < 0.0) {
    // Gamma alternates sign on the intervals (-k-1, -k)
    double f = std::floor(x);
    if (static_cast<long long>(-f) % 2 != 0) sign = -1;
  }
  return {std::lgamma(x), sign};
}

/// log Gamma(z), principal branch on Re z >= 0.5, reflection elsewhere.
inline std::complex<double> log_gamma(std::complex<double> z) {
  using std::numbers::pi;
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::lgamma(z.real()), 0.0};
  if (z.real() >= 0.5) return detail::lanczos_log_gamma(z);
  // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
  std::complex<double> s = std::sin(pi * z);
  return std::log(pi / s) - detail::lanczos_log_gamma(1.0 - z);
}

}  // namespace horokit
