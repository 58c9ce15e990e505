#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "horokit/linalg.hpp"
#include "horokit/root_system.hpp"

// Finite-dimensional oracle for the hyperbolic plane. The space of polynomials
// on R^2 that are homogeneous of degree 2l carries an irreducible SL(2,R)
// action (pi(g) p)(w) = p(g^{-1} w), the spherical representation with highest
// restricted weight 2l omega. In the monomial basis e_a = u^a v^{2l-a} all of
// the following is exact rational arithmetic:
//
//   * generator matrices of the rotation subgroup K, the diagonal subgroup A
//     and the two unipotent subgroups;
//   * the K-fixed line (spanned by (u^2+v^2)^l) and the horospherical line
//     fixed by the upper unipotent subgroup (spanned by v^{2l}), both found as
//     one-dimensional kernels;
//   * the evaluation-at-base-point functional, the left kernel of the rotation
//     generator;
//   * the inner product making K act orthogonally, A self-adjointly and the
//     unipotents skew to each other ((g x | theta(g) y) = (x | y)), determined
//     up to scale by irreducibility and solved for as a kernel.
//
// cos^2 of the angle between the two fixed lines, measured with evaluation-
// normalized vectors, is the Radon eigenvalue of the degree-2l component; the
// same number shows up as the leading coefficient of the K-spherical matrix
// coefficient along the geodesic exp(t X_A), which asymptotic_coefficient
// extracts numerically as an independent route.

namespace horokit {

struct RepModel {
  long l = 0;
  std::size_t dim = 1;     // 2l + 1
  RatMat rot_gen;          // K
  RatMat diag_gen;         // A
  RatMat unip_gen;         // upper unipotent
  RatMat unip_bar_gen;     // lower unipotent
  RatMat gram;             // invariant inner product, SPD
  RatVec eval_functional;  // first nonzero entry normalized to 1
  RatVec k_fixed;          // evaluation-normalized K-fixed vector
  RatVec s_fixed;          // evaluation-normalized horospherical vector
};

namespace detail {

inline RatVec scale_to_eval_one(const RatVec& v, const RatVec& f, const char* which) {
  Rational val = rat_dot(f, v);
  if (val == 0)
    throw std::logic_error(std::string("rep model: evaluation functional vanishes on the ") +
                           which + " fixed line");
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / val;
  return out;
}

}  // namespace detail

inline RepModel build_rep_model(long l) {
  if (l < 0) throw std::invalid_argument("build_rep_model: l must be >= 0");
  RepModel m;
  m.l = l;
  std::size_t d = static_cast<std::size_t>(2 * l + 1);
  m.dim = d;
  m.rot_gen = rat_zero(d, d);
  m.diag_gen = rat_zero(d, d);
  m.unip_gen = rat_zero(d, d);
  m.unip_bar_gen = rat_zero(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    long la = static_cast<long>(a);
    m.diag_gen[a][a] = 2 * l - 2 * la;
    if (a > 0) {
      m.rot_gen[a - 1][a] = la;       // v d/du part
      m.unip_gen[a - 1][a] = -la;
    }
    if (a + 1 < d) {
      m.rot_gen[a + 1][a] = -(2 * l - la);  // -u d/dv part
      m.unip_bar_gen[a + 1][a] = -(2 * l - la);
    }
  }

  auto k_kernel = rat_kernel(m.rot_gen);
  if (k_kernel.size() != 1) throw std::logic_error("rep model: K-fixed line not one-dimensional");
  auto s_kernel = rat_kernel(m.unip_gen);
  if (s_kernel.size() != 1)
    throw std::logic_error("rep model: horospherical line not one-dimensional");

  auto left_kernel = rat_kernel(rat_transpose(m.rot_gen));
  if (left_kernel.size() != 1)
    throw std::logic_error("rep model: evaluation functional not one-dimensional");
  m.eval_functional = left_kernel[0];
  for (auto& x : m.eval_functional)
    if (x != 0) {
      Rational lead = x;
      for (auto& y : m.eval_functional) y /= lead;
      break;
    }

  // invariant Gram: symmetric G with G A = A^T G and G K = -K^T G, solved as a
  // kernel over the d(d+1)/2 upper-triangle unknowns
  std::size_t nu = d * (d + 1) / 2;
  auto unknown = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i + 1) / 2 + j;
  };
  RatMat sys;
  auto add_constraints = [&](const RatMat& z, int sign) {
    // rows of (G z - sign * z^T G) = 0
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        RatVec row(nu, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
          if (z[j][c] != 0) row[unknown(r, j)] += z[j][c];         // (G z)[r][c]
          if (z[j][r] != 0) row[unknown(j, c)] -= sign * z[j][r];  // (z^T G)[r][c]
        }
        bool nonzero = false;
        for (const auto& x : row) nonzero = nonzero || x != 0;
        if (nonzero) sys.push_back(std::move(row));
      }
  };
  add_constraints(m.diag_gen, +1);
  add_constraints(m.rot_gen, -1);
  auto gsol = sys.empty() ? std::vector<RatVec>{RatVec(nu, Rational(1))} : rat_kernel(sys);
  if (gsol.size() != 1)
    throw std::logic_error("rep model: invariant inner product not unique up to scale");
  m.gram = rat_zero(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) m.gram[i][j] = m.gram[j][i] = gsol[0][unknown(i, j)];
  if (m.gram[0][0] < 0)
    for (auto& row : m.gram)
      for (auto& x : row) x = -x;
  if (!rat_is_spd(m.gram)) throw std::logic_error("rep model: invariant form not positive definite");
  // cross-check the unipotent pair: G U = Ubar^T G
  {
    RatMat lhs = rat_mul(m.gram, m.unip_gen);
    RatMat rhs = rat_mul(rat_transpose(m.unip_bar_gen), m.gram);
    if (lhs != rhs) throw std::logic_error("rep model: unipotent skew-invariance failed");
  }

  m.k_fixed = detail::scale_to_eval_one(k_kernel[0], m.eval_functional, "K");
  m.s_fixed = detail::scale_to_eval_one(s_kernel[0], m.eval_functional, "horospherical");
  return m;
}

/// cos^2 of the invariant angle between the K-fixed and horospherical lines,
/// with both vectors normalized to evaluation 1.
inline Rational rep_cos2_exact(const RepModel& m) {
  Rational num = rat_bilinear(m.gram, m.k_fixed, m.s_fixed);
  Rational den = rat_bilinear(m.gram, m.s_fixed, m.s_fixed);
  return num / den;
}

inline double rep_cos2(const RepModel& m) { return to_double(rep_cos2_exact(m)); }

/// Exact action matrix of a unimodular rational 2x2 matrix [[a,b],[c,d]]:
/// pi(g) e_a expanded binomially. For cross-checking invariance at group level.
inline RatMat rep_group_action(const RepModel& m, const Rational& a, const Rational& b,
                               const Rational& c, const Rational& d) {
  if (a * d - b * c != 1)
    throw std::invalid_argument("rep_group_action: matrix must have determinant 1");
  std::size_t dim = m.dim;
  long l2 = 2 * m.l;
  // g^{-1} = [[d, -b], [-c, a]]; u' = d u - b v, v' = -c u + a v
  RatMat out = rat_zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    long p = static_cast<long>(col);  // u-degree
    long q = l2 - p;
    // (d u - b v)^p (-c u + a v)^q, coefficient of u^i v^{l2-i}
    std::vector<Rational> poly1(p + 1), poly2(q + 1);
    Rational binom = 1;
    for (long i = 0; i <= p; ++i) {
      poly1[i] = binom * rat_pow(d, i) * rat_pow(-b, p - i);  // u^i v^{p-i}
      binom = binom * (p - i) / (i + 1);
    }
    binom = 1;
    for (long i = 0; i <= q; ++i) {
      poly2[i] = binom * rat_pow(-c, i) * rat_pow(a, q - i);
      binom = binom * (q - i) / (i + 1);
    }
    for (long i = 0; i <= p; ++i)
      for (long j = 0; j <= q; ++j) out[i + j][col] += poly1[i] * poly2[j];
  }
  return out;
}

struct AsymptoticResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Leading coefficient of t -> e^{-2lt} * eval(pi(exp(t diag_gen)) k_fixed),
/// extrapolated from samples on t_grid (Aitken on the last three). The grid
/// must reach far enough that e^{-t} is below 1e-8.
inline AsymptoticResult asymptotic_coefficient(const RepModel& m,
                                               std::vector<double> t_grid = {}) {
  if (t_grid.empty()) t_grid = {6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0};
  if (t_grid.size() < 3)
    throw std::invalid_argument("asymptotic_coefficient: need at least 3 grid points");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1])
      throw std::invalid_argument("asymptotic_coefficient: grid must be increasing");
  double tmax = t_grid.back();
  if (std::exp(-tmax) > 1e-8)
    throw std::invalid_argument(
        "asymptotic_coefficient: grid must extend until e^{-t} <= 1e-8 (t >= ~18.4)");

  // e^{-2lt} pi(exp(t A)) e_a = e^{-2at} e_a, so the sampled function is a
  // finite sum of decaying exponentials plus the a = 0 constant.
  auto sample = [&](double t) {
    double s = 0.0;
    for (std::size_t a = 0; a < m.dim; ++a)
      s += to_double(m.eval_functional[a]) * to_double(m.k_fixed[a]) *
           std::exp(-2.0 * static_cast<double>(a) * t);
    return s;
  };
  std::vector<double> vals;
  vals.reserve(t_grid.size());
  for (double t : t_grid) vals.push_back(sample(t));

  std::size_t n = vals.size();
  double tail_step = std::abs(vals[n - 1] - vals[n - 2]);
  if (tail_step > 1e-6 * (1.0 + std::abs(vals[n - 1])))
    throw std::runtime_error("asymptotic_coefficient: sequence not converged on the given grid "
                             "(last step " + std::to_string(tail_step) + ")");
  AsymptoticResult res;
  double x0 = vals[n - 3], x1 = vals[n - 2], x2 = vals[n - 1];
  double denom = (x2 - x1) - (x1 - x0);
  if (std::abs(denom) < 1e-300) {
    res.value = x2;  // numerically constant already
  } else {
    res.value = x2 - (x2 - x1) * (x2 - x1) / denom;
  }
  res.error_estimate = std::abs(res.value - x2) + std::exp(-2.0 * tmax);
  return res;
}

}  // namespace horokit
