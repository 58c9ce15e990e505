#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "horokit/rational.hpp"

// Dense exact linear algebra over the rationals. Everything here works on tiny
// matrices (root-system ranks, polynomial-model dimensions), so plain Gaussian
// elimination is entirely adequate.

namespace horokit {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline RatMat rat_zero(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rational(0)));
}

inline RatMat rat_identity(std::size_t n) {
  RatMat a = rat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

inline RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return a;
  RatMat t = rat_zero(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  RatMat c = rat_zero(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline RatVec rat_mul_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline Rational rat_dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// x^T G y.
inline Rational rat_bilinear(const RatMat& g, const RatVec& x, const RatVec& y) {
  return rat_dot(x, rat_mul_vec(g, y));
}

/// In-place reduced row echelon form; returns the pivot column indices.
inline std::vector<std::size_t> rat_rref(RatMat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rat_rank(RatMat a) { return rat_rref(a).size(); }

/// Solves A x = b exactly (A may be rectangular). Returns nullopt when the
/// system is inconsistent; free variables, if any, are set to zero.
inline std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  RatMat aug = rat_zero(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rat_rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

/// Basis of the right null space of A.
inline std::vector<RatVec> rat_kernel(RatMat a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rat_rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rational(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact symmetric positive definiteness: all pivots of the no-swap elimination
/// are positive.
inline bool rat_is_spd(RatMat g) {
  std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].size() != n) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (g[i][j] != g[j][i]) return false;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (g[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = g[i][k] / g[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
    }
  }
  return true;
}

}  // namespace horokit
