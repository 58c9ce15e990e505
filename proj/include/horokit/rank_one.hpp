#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "horokit/quadrature.hpp"
#include "horokit/root_system.hpp"

// Rank-one integral oracle. For G = SL(2,R) or SL(2,C) the c-function has the
// classical integral form
//
//   cbar(lambda) = integral over the opposite unipotent group of
//                  e^{-(lambda+rho)(H(ubar))} d(ubar),
//
// with the measure normalized so that the lambda = rho integral is 1, and
// H(g) the abelian part of the Iwasawa decomposition g = k a u. Everything
// here goes through an explicit numeric K A U decomposition of 2x2 matrices,
// so the oracle shares no code path with the Gamma-product evaluation.

namespace horokit {

enum class RankOneGroup { SL2R, SL2C };

struct Mat2 {
  std::complex<double> a, b, c, d;  // [[a, b], [c, d]]
};

inline std::complex<double> det(const Mat2& g) { return g.a * g.d - g.b * g.c; }

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

/// Opposite (lower) unipotent elements.
inline Mat2 ubar_sl2r(double x) { return {1.0, 0.0, x, 1.0}; }
inline Mat2 ubar_sl2c(std::complex<double> z) { return {1.0, 0.0, z, 1.0}; }

struct IwasawaKAU {
  Mat2 k;        // SO(2) resp. SU(2) factor
  double log_a;  // a = diag(e^t, e^{-t})
  Mat2 u;        // upper unipotent [[1, x], [0, 1]]
};

/// g = k a u by Gram-Schmidt on the columns. Demands |det g - 1| <= det_tol,
/// and real entries for SL(2,R).
inline IwasawaKAU iwasawa_decompose(const Mat2& g, RankOneGroup group, double det_tol = 1e-12) {
  if (std::abs(det(g) - 1.0) > det_tol)
    throw std::domain_error("iwasawa_decompose: matrix is not unimodular");
  if (group == RankOneGroup::SL2R) {
    for (auto z : {g.a, g.b, g.c, g.d})
      if (std::abs(z.imag()) > det_tol)
        throw std::domain_error("iwasawa_decompose: SL(2,R) needs a real matrix");
  }
  // first column
  double n0 = std::sqrt(std::norm(g.a) + std::norm(g.c));
  std::complex<double> q0a = g.a / n0, q0c = g.c / n0;
  // project the second column off q0 (conjugate-linear in the first slot)
  std::complex<double> p = std::conj(q0a) * g.b + std::conj(q0c) * g.d;
  std::complex<double> r1a = g.b - p * q0a, r1c = g.d - p * q0c;
  double n1 = std::sqrt(std::norm(r1a) + std::norm(r1c));
  IwasawaKAU out;
  out.k = {q0a, r1a / n1, q0c, r1c / n1};
  out.log_a = 0.5 * (std::log(n0) - std::log(n1));  // det 1 makes n1 = 1/n0
  out.u = {1.0, p / n0, 0.0, 1.0};
  return out;
}

/// alpha(H(g)) for the positive restricted root alpha.
inline double alpha_H(const Mat2& g, RankOneGroup group) {
  return 2.0 * iwasawa_decompose(g, group).log_a;
}

inline RestrictedRootSystem rank_one_root_system(RankOneGroup group) {
  return catalog_space(group == RankOneGroup::SL2R ? "hyperbolic-real-2" : "sl2c");
}

/// rho as a multiple of alpha: m/2.
inline double rank_one_rho_coeff(RankOneGroup group) {
  return group == RankOneGroup::SL2R ? 0.5 : 1.0;
}

namespace detail {

// integral of e^{-s alpha(H(ubar))} d(ubar) with x = sinh(u) (SL2R) or the
// radial substitution r = sinh(u) (SL2C, the angular factor cancels in ratios)
inline std::complex<double> ubar_integral(RankOneGroup group, std::complex<double> s,
                                          const QuadratureSpec& spec) {
  double rate = 2.0 * s.real() - 2.0 * rank_one_rho_coeff(group);  // = 2 Re(lambda_c)
  if (rate <= 0.0) throw std::domain_error("cbar_integral: needs Re(lambda) > 0");
  double cutoff = std::min((std::log(1.0 / spec.target_abs_err) + 8.0) / rate, 350.0);
  if (group == RankOneGroup::SL2R) {
    auto f = [&](double u) {
      double x = std::sinh(u);
      return std::exp(-s * alpha_H(ubar_sl2r(x), RankOneGroup::SL2R)) * std::cosh(u);
    };
    return integrate_adaptive(f, -cutoff, cutoff, spec);
  }
  auto f = [&](double u) {
    double r = std::sinh(u);
    return std::exp(-s * alpha_H(ubar_sl2c({r, 0.0}), RankOneGroup::SL2C)) * r * std::cosh(u);
  };
  double two_pi = 2.0 * std::acos(-1.0);
  return two_pi * integrate_adaptive(f, 0.0, cutoff, spec);
}

}  // namespace detail

/// cbar(lambda) for lambda = lambda_c * alpha, normalized by the lambda = rho
/// value. Needs Re(lambda_c) > 0 for convergence.
inline std::complex<double> cbar_integral(RankOneGroup group, std::complex<double> lambda_c,
                                          const QuadratureSpec& spec = {}) {
  double rc = rank_one_rho_coeff(group);
  std::complex<double> num = detail::ubar_integral(group, lambda_c + rc, spec);
  std::complex<double> den = detail::ubar_integral(group, 2.0 * rc, spec);
  return num / den;
}

/// The unnormalized integral itself, for absolute cross-checks.
inline std::complex<double> ubar_integral_raw(RankOneGroup group, std::complex<double> s,
                                              const QuadratureSpec& spec = {}) {
  return detail::ubar_integral(group, s, spec);
}

}  // namespace horokit
