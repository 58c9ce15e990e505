#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "horokit/linalg.hpp"
#include "horokit/rational.hpp"

// Restricted root systems of Riemannian symmetric spaces G/K: a finite set of
// positive roots in a rational inner-product space, each carrying the dimension
// m_alpha of its root space. Non-reduced systems (type BC) list both alpha and
// 2*alpha. The half sum rho, the basis of indivisible simple roots beta_j and
// the fundamental restricted weights omega_j (the free generators of the
// semigroup of spherical representations) are derived here, all exactly.

namespace horokit {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositiveRoot {
  RatVec coords;                    // ambient coordinates
  std::vector<long> simple_coeffs;  // expansion over the simple roots
  long multiplicity = 0;            // m_alpha
  bool divisible = false;           // 2*alpha is also a root
  long double_multiplicity = 0;     // m_{2 alpha}, 0 unless divisible
  bool is_double = false;           // alpha = 2*beta for another positive root beta
};

struct RestrictedRootSystem {
  std::string name;
  int rank = 0;
  int ambient_dim = 0;
  RatMat gram;                       // ambient inner product
  std::vector<RatVec> simple_roots;  // size == rank
  std::vector<PositiveRoot> positive_roots;  // sorted lexicographically by simple_coeffs
  std::string catalog_provenance;    // "core", "external" or "file"
};

using ComplexVec = std::vector<std::complex<double>>;

inline Rational inner(const RestrictedRootSystem& rs, const RatVec& x, const RatVec& y) {
  return rat_bilinear(rs.gram, x, y);
}

/// Normalized pairing lambda_alpha = (lambda, alpha) / (alpha, alpha).
inline Rational pairing(const RestrictedRootSystem& rs, const RatVec& lambda, const RatVec& alpha) {
  Rational aa = inner(rs, alpha, alpha);
  if (aa == 0) throw std::invalid_argument("pairing: zero-length root");
  return inner(rs, lambda, alpha) / aa;
}

inline std::complex<double> pairing(const RestrictedRootSystem& rs, const ComplexVec& lambda,
                                    const RatVec& alpha) {
  if (lambda.size() != alpha.size()) throw std::invalid_argument("pairing: dimension mismatch");
  RatVec ga = rat_mul_vec(rs.gram, alpha);
  std::complex<double> num = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) num += lambda[i] * to_double(ga[i]);
  Rational aa = rat_dot(alpha, ga);
  if (aa == 0) throw std::invalid_argument("pairing: zero-length root");
  return num / to_double(aa);
}

/// Half sum of the positive roots with multiplicities.
inline RatVec rho(const RestrictedRootSystem& rs) {
  RatVec r(rs.ambient_dim, Rational(0));
  for (const auto& pr : rs.positive_roots)
    for (int i = 0; i < rs.ambient_dim; ++i)
      r[i] += Rational(pr.multiplicity, 2) * pr.coords[i];
  return r;
}

inline bool is_reduced(const RestrictedRootSystem& rs) {
  return std::none_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                      [](const PositiveRoot& r) { return r.divisible; });
}

inline bool has_even_multiplicities(const RestrictedRootSystem& rs) {
  return is_reduced(rs) && std::all_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                                       [](const PositiveRoot& r) { return r.multiplicity % 2 == 0; });
}

/// Complex-group case: reduced with every multiplicity equal to 2.
inline bool is_complex_group(const RestrictedRootSystem& rs) {
  return is_reduced(rs) && std::all_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                                       [](const PositiveRoot& r) { return r.multiplicity == 2; });
}

/// The indivisible positive roots (alpha with alpha/2 not a root); the product
/// formulas run over these.
inline std::vector<const PositiveRoot*> indivisible_positive_roots(const RestrictedRootSystem& rs) {
  std::vector<const PositiveRoot*> out;
  for (const auto& pr : rs.positive_roots)
    if (!pr.is_double) out.push_back(&pr);
  return out;
}

/// beta_j = alpha_j when 2*alpha_j is not a root, else 2*alpha_j.
inline std::vector<RatVec> beta_basis(const RestrictedRootSystem& rs) {
  std::vector<RatVec> betas;
  betas.reserve(rs.rank);
  for (const auto& alpha : rs.simple_roots) {
    RatVec twice(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) twice[i] = 2 * alpha[i];
    bool doubled = std::any_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                               [&](const PositiveRoot& r) { return r.coords == twice; });
    betas.push_back(doubled ? twice : alpha);
  }
  return betas;
}

/// Fundamental restricted weights: (omega_j, beta_i)/(beta_i, beta_i) = delta_ij.
/// Solved exactly inside the span of the beta basis.
inline std::vector<RatVec> fundamental_weights(const RestrictedRootSystem& rs) {
  auto betas = beta_basis(rs);
  std::size_t r = betas.size();
  RatMat m = rat_zero(r, r);  // m[i][k] = (beta_i, beta_k)
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) m[i][k] = inner(rs, betas[i], betas[k]);
  std::vector<RatVec> omegas;
  for (std::size_t j = 0; j < r; ++j) {
    RatVec rhs(r, Rational(0));
    rhs[j] = m[j][j];
    auto c = rat_solve(m, rhs);
    if (!c) throw std::logic_error("fundamental_weights: beta Gram matrix singular");
    RatVec w(rs.ambient_dim, Rational(0));
    for (std::size_t k = 0; k < r; ++k)
      for (int i = 0; i < rs.ambient_dim; ++i) w[i] += (*c)[k] * betas[k][i];
    omegas.push_back(std::move(w));
  }
  return omegas;
}

/// Sum n_j * omega_j for nonnegative integer coefficients.
inline RatVec weight_of(const RestrictedRootSystem& rs, const std::vector<long>& coeffs) {
  if (static_cast<int>(coeffs.size()) != rs.rank)
    throw std::invalid_argument("weight_of: expected " + std::to_string(rs.rank) + " coefficients");
  for (long n : coeffs)
    if (n < 0) throw std::invalid_argument("weight_of: coefficients must be nonnegative");
  auto omegas = fundamental_weights(rs);
  RatVec w(rs.ambient_dim, Rational(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (int i = 0; i < rs.ambient_dim; ++i) w[i] += Rational(coeffs[j]) * omegas[j][i];
  return w;
}

// ---------------------------------------------------------------------------
// Construction

struct RootSystemSpec {
  std::string name;
  std::string type;  // "A", "B", "C", "D", "BC" or "explicit"
  int rank = 0;
  std::optional<long> m_short, m_long, m_double;
  std::optional<std::vector<RatVec>> simple_roots;  // explicit only
  std::optional<RatMat> gram;
  struct ExplicitRoot {
    RatVec coords;
    long multiplicity = 0;
  };
  std::optional<std::vector<ExplicitRoot>> positive_roots;  // explicit only
};

namespace detail {

inline RatVec unit(int dim, int i, Rational scale = 1) {
  RatVec v(dim, Rational(0));
  v[i] = scale;
  return v;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return v;
}

inline RatVec vec_scale(const RatVec& a, const Rational& s) {
  RatVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = s * a[i];
  return v;
}

struct RawRoot {
  RatVec coords;
  long multiplicity;
};

inline long require_mult(const std::optional<long>& m, const std::string& key) {
  if (!m) throw ValidationError("multiplicities." + key + ": required for this type/rank");
  if (*m <= 0) throw ValidationError("multiplicities." + key + ": must be a positive integer");
  return *m;
}

inline void forbid_mult(const std::optional<long>& m, const std::string& key) {
  if (m) throw ValidationError("multiplicities." + key + ": not applicable for this type/rank");
}

}  // namespace detail

/// Builds and fully validates a root system from a spec. Throws ValidationError
/// with the offending field in the message.
inline RestrictedRootSystem build_root_system(const RootSystemSpec& spec) {
  using namespace detail;
  if (spec.name.empty()) throw ValidationError("name: required");
  if (spec.rank < 1) throw ValidationError("rank: must be >= 1");
  const int r = spec.rank;

  RestrictedRootSystem rs;
  rs.name = spec.name;
  rs.rank = r;
  rs.catalog_provenance = "file";

  std::vector<RawRoot> raw;
  if (spec.type == "A") {
    rs.ambient_dim = r + 1;
    long ms = require_mult(spec.m_short, "short");
    forbid_mult(spec.m_long, "long");
    forbid_mult(spec.m_double, "double");
    for (int i = 0; i < r; ++i)
      rs.simple_roots.push_back(vec_sub(unit(r + 1, i), unit(r + 1, i + 1)));
    for (int i = 0; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        raw.push_back({vec_sub(unit(r + 1, i), unit(r + 1, j)), ms});
  } else if (spec.type == "B" || spec.type == "C" || spec.type == "D" || spec.type == "BC") {
    rs.ambient_dim = r;
    bool has_pairs = r >= 2;  // the e_i +/- e_j family
    if (spec.type == "D" && r < 2) throw ValidationError("rank: type D needs rank >= 2");
    std::optional<long> ms, ml, md;
    if (spec.type == "B") {
      ms = require_mult(spec.m_short, "short");  // e_i
      if (has_pairs)
        ml = require_mult(spec.m_long, "long");  // e_i +/- e_j
      else
        forbid_mult(spec.m_long, "long");
      forbid_mult(spec.m_double, "double");
    } else if (spec.type == "C") {
      if (has_pairs)
        ms = require_mult(spec.m_short, "short");  // e_i +/- e_j
      else
        forbid_mult(spec.m_short, "short");
      ml = require_mult(spec.m_long, "long");  // 2 e_i
      forbid_mult(spec.m_double, "double");
    } else if (spec.type == "D") {
      ms = require_mult(spec.m_short, "short");  // e_i +/- e_j, the only class
      forbid_mult(spec.m_long, "long");
      forbid_mult(spec.m_double, "double");
    } else {  // BC
      ms = require_mult(spec.m_short, "short");   // e_i
      md = require_mult(spec.m_double, "double");  // 2 e_i
      if (has_pairs)
        ml = require_mult(spec.m_long, "long");  // e_i +/- e_j
      else
        forbid_mult(spec.m_long, "long");
    }
    // simple roots: the chain e_i - e_{i+1} plus one type-specific end root
    for (int i = 0; i + 1 < r; ++i)
      rs.simple_roots.push_back(vec_sub(unit(r, i), unit(r, i + 1)));
    if (spec.type == "B" || spec.type == "BC") rs.simple_roots.push_back(unit(r, r - 1));
    if (spec.type == "C") rs.simple_roots.push_back(unit(r, r - 1, 2));
    if (spec.type == "D") rs.simple_roots.push_back(vec_add(unit(r, r - 2), unit(r, r - 1)));
    // positive roots
    if (spec.type != "D")
      for (int i = 0; i < r; ++i) {
        if (spec.type == "B" || spec.type == "BC") raw.push_back({unit(r, i), *ms});
        if (spec.type == "C") raw.push_back({unit(r, i, 2), *ml});
        if (spec.type == "BC") raw.push_back({unit(r, i, 2), *md});
      }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        long m = (spec.type == "B" || spec.type == "BC") ? *ml
                 : (spec.type == "C")                    ? *ms
                                                         : *ms;
        raw.push_back({vec_sub(unit(r, i), unit(r, j)), m});
        raw.push_back({vec_add(unit(r, i), unit(r, j)), m});
      }
  } else if (spec.type == "explicit") {
    if (!spec.simple_roots || spec.simple_roots->empty())
      throw ValidationError("simple_roots: required for type explicit");
    rs.simple_roots = *spec.simple_roots;
    rs.ambient_dim = static_cast<int>(rs.simple_roots[0].size());
    if (static_cast<int>(rs.simple_roots.size()) != r)
      throw ValidationError("simple_roots: expected rank = " + std::to_string(r) + " entries");
    for (const auto& s : rs.simple_roots)
      if (static_cast<int>(s.size()) != rs.ambient_dim)
        throw ValidationError("simple_roots: inconsistent coordinate dimension");
    if (spec.positive_roots) {
      for (std::size_t k = 0; k < spec.positive_roots->size(); ++k) {
        const auto& er = (*spec.positive_roots)[k];
        if (static_cast<int>(er.coords.size()) != rs.ambient_dim)
          throw ValidationError("positive_roots[" + std::to_string(k) +
                                "].coords: inconsistent coordinate dimension");
        if (er.multiplicity <= 0)
          throw ValidationError("positive_roots[" + std::to_string(k) +
                                "].multiplicity: must be a positive integer");
        raw.push_back({er.coords, er.multiplicity});
      }
    } else {
      long ms = require_mult(spec.m_short, "short");
      for (const auto& s : rs.simple_roots) raw.push_back({s, ms});
    }
  } else {
    throw ValidationError("type: unknown type '" + spec.type +
                          "' (expected A, B, C, D, BC or explicit)");
  }

  if (spec.type != "explicit" && spec.simple_roots)
    throw ValidationError("simple_roots: only valid for type explicit");
  if (spec.type != "explicit" && spec.positive_roots)
    throw ValidationError("positive_roots: only valid for type explicit");

  rs.gram = spec.gram ? *spec.gram : rat_identity(rs.ambient_dim);
  if (static_cast<int>(rs.gram.size()) != rs.ambient_dim)
    throw ValidationError("gram: expected a " + std::to_string(rs.ambient_dim) + "x" +
                          std::to_string(rs.ambient_dim) + " matrix");
  if (!rat_is_spd(rs.gram))
    throw ValidationError("gram: must be symmetric positive definite");

  {
    RatMat m(rs.simple_roots.begin(), rs.simple_roots.end());
    if (rat_rank(m) != static_cast<std::size_t>(r))
      throw ValidationError("simple_roots: not linearly independent");
  }

  // Expand every positive root over the simple roots; demand nonnegative
  // integer coefficients.
  RatMat basis_t = rat_zero(rs.ambient_dim, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < rs.ambient_dim; ++i) basis_t[i][j] = rs.simple_roots[j][i];
  for (auto& rr : raw) {
    auto sol = rat_solve(basis_t, rr.coords);
    if (!sol)
      throw ValidationError("positive_roots: root outside the span of the simple roots");
    PositiveRoot pr;
    pr.coords = rr.coords;
    pr.multiplicity = rr.multiplicity;
    bool all_zero = true;
    for (const auto& c : *sol) {
      if (!is_integer(c) || c < 0)
        throw ValidationError(
            "positive_roots: root is not a nonnegative integer combination of simple roots");
      if (c != 0) all_zero = false;
      pr.simple_coeffs.push_back(static_cast<long>(rat_num(c)));
    }
    if (all_zero) throw ValidationError("positive_roots: zero vector is not a root");
    rs.positive_roots.push_back(std::move(pr));
  }

  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              return a.simple_coeffs < b.simple_coeffs;
            });
  for (std::size_t i = 0; i + 1 < rs.positive_roots.size(); ++i)
    if (rs.positive_roots[i].simple_coeffs == rs.positive_roots[i + 1].simple_coeffs)
      throw ValidationError("positive_roots: duplicate root");

  // Divisibility bookkeeping: alpha vs 2*alpha.
  for (auto& pr : rs.positive_roots) {
    std::vector<long> twice(pr.simple_coeffs), half;
    for (auto& c : twice) c *= 2;
    bool halvable = std::all_of(pr.simple_coeffs.begin(), pr.simple_coeffs.end(),
                                [](long c) { return c % 2 == 0; });
    if (halvable) {
      half = pr.simple_coeffs;
      for (auto& c : half) c /= 2;
    }
    for (const auto& other : rs.positive_roots) {
      if (other.simple_coeffs == twice) {
        pr.divisible = true;
        pr.double_multiplicity = other.multiplicity;
      }
      if (halvable && other.simple_coeffs == half) pr.is_double = true;
    }
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

inline std::optional<long> parse_suffix_int(const std::string& s, const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0) return std::nullopt;
  std::string tail = s.substr(prefix.size());
  if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    return std::nullopt;
  return std::stol(tail);
}

// "sl<n>r-so<n>" shorthand, e.g. sl3r-so3.
inline std::optional<long> parse_slnr_short(const std::string& s) {
  if (s.rfind("sl", 0) != 0) return std::nullopt;
  auto rpos = s.find("r-so");
  if (rpos == std::string::npos) return std::nullopt;
  std::string a = s.substr(2, rpos - 2), b = s.substr(rpos + 4);
  if (a.empty() || a != b) return std::nullopt;
  if (!std::all_of(a.begin(), a.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return std::stol(a);
}

}  // namespace detail

/// Model spaces with a fixed key scheme. Parameterized families accept any
/// admissible parameter, not just the values listed by catalog_entries().
inline RestrictedRootSystem catalog_space(const std::string& key) {
  using namespace detail;
  auto finish = [&](RootSystemSpec spec, const std::string& provenance) {
    spec.name = key;
    auto rs = build_root_system(spec);
    rs.catalog_provenance = provenance;
    return rs;
  };
  if (auto n = parse_suffix_int(key, "hyperbolic-real-")) {
    if (*n < 2) throw CatalogError("catalog: hyperbolic-real-<n> needs n >= 2");
    RootSystemSpec spec;
    spec.type = "A";
    spec.rank = 1;
    spec.m_short = *n - 1;
    return finish(std::move(spec), "core");
  }
  if (key == "sl2c") {
    RootSystemSpec spec;
    spec.type = "A";
    spec.rank = 1;
    spec.m_short = 2;
    return finish(std::move(spec), "core");
  }
  std::optional<long> n = parse_suffix_int(key, "slnr-son-");
  if (!n) n = parse_slnr_short(key);
  if (n) {
    if (*n < 3) throw CatalogError("catalog: slnr-son-<n> needs n >= 3");
    RootSystemSpec spec;
    spec.type = "A";
    spec.rank = static_cast<int>(*n) - 1;
    spec.m_short = 1;
    return finish(std::move(spec), "external");
  }
  if (auto cn = parse_suffix_int(key, "complex-hyperbolic-")) {
    if (*cn < 2) throw CatalogError("catalog: complex-hyperbolic-<n> needs n >= 2");
    RootSystemSpec spec;
    spec.type = "BC";
    spec.rank = 1;
    spec.m_short = 2 * (*cn - 1);
    spec.m_double = 1;
    return finish(std::move(spec), "external");
  }
  throw CatalogError(
      "catalog: unknown space '" + key +
      "'; known keys: hyperbolic-real-<n> (n>=2), sl2c, slnr-son-<n> (n>=3, alias sl<n>r-so<n>), "
      "complex-hyperbolic-<n> (n>=2)");
}

struct CatalogEntry {
  std::string key;
  std::string description;
};

/// The concrete instances exercised by tests and listed by the CLI.
inline std::vector<CatalogEntry> catalog_entries() {
  return {
      {"hyperbolic-real-2", "real hyperbolic plane, A1 with m = 1"},
      {"hyperbolic-real-3", "real hyperbolic 3-space, A1 with m = 2"},
      {"hyperbolic-real-4", "real hyperbolic 4-space, A1 with m = 3"},
      {"hyperbolic-real-5", "real hyperbolic 5-space, A1 with m = 4"},
      {"sl2c", "SL(2,C)/SU(2), same system as hyperbolic-real-3"},
      {"slnr-son-3", "SL(3,R)/SO(3), A2 with m = 1"},
      {"slnr-son-4", "SL(4,R)/SO(4), A3 with m = 1"},
      {"complex-hyperbolic-2", "complex hyperbolic plane, BC1 with m = (2,1)"},
      {"complex-hyperbolic-3", "complex hyperbolic 3-space, BC1 with m = (4,1)"},
  };
}

}  // namespace horokit
