#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "horokit/cfunction.hpp"
#include "horokit/rep_model.hpp"

using namespace horokit;
using Catch::Approx;

namespace {

// central binomial closed form C(2l, l) / 4^l, the expected cos^2 sequence
Rational central_binomial_ratio(long l) {
  Rational out = 1;
  for (long j = 1; j <= l; ++j) out *= Rational(2 * j - 1, 2 * j);
  return out;
}

// exp of a nilpotent rational matrix, exact finite sum; term tracks z^k / k!
RatMat rat_exp_nilpotent(const RatMat& z) {
  std::size_t n = z.size();
  RatMat acc = rat_identity(n), term = rat_identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = rat_mul(term, z);
    for (auto& row : term)
      for (auto& x : row) x /= Rational(static_cast<long>(k));
    bool zero = true;
    for (const auto& row : term)
      for (const auto& x : row) zero = zero && x == 0;
    if (zero) break;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc[i][j] += term[i][j];
  }
  return acc;
}

// theta(g) = (g^T)^{-1} for det-1 matrices
struct RatMat2 {
  Rational a, b, c, d;
};
RatMat2 theta(const RatMat2& g) { return {g.d, -g.c, -g.b, g.a}; }

RatMat action(const RepModel& m, const RatMat2& g) {
  return rep_group_action(m, g.a, g.b, g.c, g.d);
}

}  // namespace

TEST_CASE("rep model structure at l = 1") {
  auto m = build_rep_model(1);
  REQUIRE(m.dim == 3);
  CHECK(m.diag_gen[0][0] == 2);
  CHECK(m.diag_gen[1][1] == 0);
  CHECK(m.diag_gen[2][2] == -2);
  CHECK(m.rot_gen[0][1] == 1);
  CHECK(m.rot_gen[1][0] == -2);
  CHECK(m.rot_gen[1][2] == 2);
  CHECK(m.rot_gen[2][1] == -1);
  // evaluation functional (1, 0, 1), K-fixed line u^2 + v^2
  CHECK(m.eval_functional == RatVec{1, 0, 1});
  CHECK(m.k_fixed == RatVec{Rational(1, 2), 0, Rational(1, 2)});
  CHECK(m.s_fixed == RatVec{1, 0, 0});
  // invariant form is diagonal with ratios (2, 1, 2)
  CHECK(m.gram[0][1] == 0);
  CHECK(m.gram[0][2] == 0);
  CHECK(m.gram[0][0] == m.gram[2][2]);
  CHECK(m.gram[0][0] == 2 * m.gram[1][1]);
  CHECK(build_rep_model(0).dim == 1);
  CHECK_THROWS_AS(build_rep_model(-1), std::invalid_argument);
}

TEST_CASE("cos^2 matches the central binomial sequence") {
  const Rational expected[6] = {Rational(1),       Rational(1, 2),   Rational(3, 8),
                                Rational(5, 16),   Rational(35, 128), Rational(63, 256)};
  for (long l = 0; l <= 5; ++l) {
    auto m = build_rep_model(l);
    Rational got = rep_cos2_exact(m);
    CHECK(got == expected[l]);
    CHECK(got == central_binomial_ratio(l));
  }
}

TEST_CASE("cos^2 equals the Gamma-product Radon eigenvalue") {
  auto rs = catalog_space("hyperbolic-real-2");
  for (long l = 0; l <= 8; ++l) {
    auto m = build_rep_model(l);
    CValue v = radon_eigenvalue(rs, {l});
    REQUIRE(v.kind() == CValue::Kind::Exact);
    CHECK(rep_cos2_exact(m) == v.exact_value());
  }
}

TEST_CASE("generator matrices exponentiate to the group action") {
  auto m = build_rep_model(3);
  SECTION("lower unipotent") {
    Rational x(7, 3);
    RatMat z = m.unip_bar_gen;
    for (auto& row : z)
      for (auto& e : row) e *= x;
    CHECK(rat_exp_nilpotent(z) == action(m, {1, 0, x, 1}));
  }
  SECTION("upper unipotent") {
    Rational b(-5, 2);
    RatMat z = m.unip_gen;
    for (auto& row : z)
      for (auto& e : row) e *= b;
    CHECK(rat_exp_nilpotent(z) == action(m, {1, b, 0, 1}));
  }
}

TEST_CASE("group-level invariances of the model") {
  auto m = build_rep_model(2);
  RatMat2 rot{0, -1, 1, 0};
  SECTION("rotation fixes the K-fixed vector") {
    RatVec moved = rat_mul_vec(action(m, rot), m.k_fixed);
    CHECK(moved == m.k_fixed);
  }
  SECTION("upper unipotent fixes the horospherical vector") {
    RatVec moved = rat_mul_vec(action(m, {1, Rational(4, 5), 0, 1}), m.s_fixed);
    CHECK(moved == m.s_fixed);
  }
  SECTION("(pi(g) x | pi(theta g) y) = (x | y)") {
    std::mt19937_64 rng(24680);
    std::uniform_int_distribution<int> num(-6, 6);
    RatMat2 gs[] = {{0, -1, 1, 0}, {2, 0, 0, Rational(1, 2)}, {1, 0, Rational(3, 2), 1},
                    {Rational(2, 3), Rational(1, 3), 1, 2}};
    for (const auto& g : gs) {
      REQUIRE(g.a * g.d - g.b * g.c == 1);
      RatMat pg = action(m, g);
      RatMat ptg = action(m, theta(g));
      for (int trial = 0; trial < 5; ++trial) {
        RatVec x(m.dim), y(m.dim);
        for (auto& e : x) e = num(rng);
        for (auto& e : y) e = num(rng);
        Rational lhs = rat_bilinear(m.gram, rat_mul_vec(pg, x), rat_mul_vec(ptg, y));
        CHECK(lhs == rat_bilinear(m.gram, x, y));
      }
    }
  }
  SECTION("non-unimodular input is rejected") {
    CHECK_THROWS_AS(rep_group_action(m, 2, 0, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("asymptotic coefficient recovers cos^2") {
  for (long l : {0L, 1L, 2L, 4L}) {
    auto m = build_rep_model(l);
    auto res = asymptotic_coefficient(m);
    double want = rep_cos2(m);
    CHECK(std::abs(res.value - want) <= res.error_estimate + 1e-12);
    CHECK(res.value == Approx(want).margin(1e-8));
  }
}

TEST_CASE("asymptotic grid validation") {
  auto m = build_rep_model(1);
  CHECK_THROWS_AS(asymptotic_coefficient(m, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_coefficient(m, {5.0, 4.0, 6.0, 20.0}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_coefficient(m, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_NOTHROW(asymptotic_coefficient(m, {10.0, 15.0, 19.0}));
}
