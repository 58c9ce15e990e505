#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "horokit/gamma_expr.hpp"
#include "horokit/special_functions.hpp"

using namespace horokit;
using std::numbers::pi;

TEST_CASE("argument shifts") {
  SECTION("integer argument telescopes to a factorial") {
    auto e = GammaExpr::gamma(Rational(5)).canonical();
    REQUIRE(e.is_exact_rational());
    CHECK(e.exact_value() == 24);
  }
  SECTION("half-integer argument becomes rational times sqrt(pi)") {
    auto e = GammaExpr::gamma(Rational(7, 2)).canonical();
    CHECK(e.gamma_factors().empty());
    CHECK(e.sqrt_pi_exponent() == 1);
    CHECK(e.prefactor() == Rational(15, 8));
    CHECK_FALSE(e.is_exact_rational());
    REQUIRE(e.is_pi_exact());
    auto [pref, k] = e.pi_exact_value();
    CHECK(pref == Rational(15, 8));
    CHECK(k == 1);
  }
  SECTION("negative non-integer argument shifts up") {
    auto e = GammaExpr::gamma(Rational(-1, 2)).canonical();
    CHECK(e.prefactor() == -2);
    CHECK(e.sqrt_pi_exponent() == 1);
    CHECK(e.gamma_factors().empty());
  }
  SECTION("argument already in (0,1) is kept") {
    auto e = GammaExpr::gamma(Rational(1, 3)).canonical();
    REQUIRE(e.gamma_factors().size() == 1);
    CHECK(e.gamma_factors().begin()->first == Rational(1, 3));
  }
}

TEST_CASE("duplication merge") {
  SECTION("Gamma(1/4) Gamma(3/4) = sqrt(2) pi") {
    auto e = (GammaExpr::gamma(Rational(1, 4)) * GammaExpr::gamma(Rational(3, 4))).canonical();
    CHECK(e.gamma_factors().empty());
    CHECK(e.two_exponent() == Rational(1, 2));
    CHECK(e.sqrt_pi_exponent() == 2);
    CHECK(e.prefactor() == 1);
    auto v = e.evaluate();
    REQUIRE(v.kind == GammaExpr::Numeric::Kind::Finite);
    CHECK_THAT(v.value, Catch::Matchers::WithinRel(std::sqrt(2.0) * pi, 1e-14));
  }
  SECTION("denominator pairs merge symmetrically") {
    auto e = (GammaExpr::gamma(Rational(1, 4)) * GammaExpr::gamma(Rational(3, 4)))
                 .inverse()
                 .canonical();
    CHECK(e.gamma_factors().empty());
    CHECK(e.two_exponent() == Rational(-1, 2));
    CHECK(e.sqrt_pi_exponent() == -2);
  }
  SECTION("opposite signs do not merge") {
    auto e = (GammaExpr::gamma(Rational(1, 4)) / GammaExpr::gamma(Rational(3, 4))).canonical();
    CHECK(e.gamma_factors().size() == 2);
  }
  SECTION("cascade: merge output can merge again") {
    // Gamma(1/8) Gamma(5/8) -> Gamma(1/4); with Gamma(3/4) present this merges on
    auto e = (GammaExpr::gamma(Rational(1, 8)) * GammaExpr::gamma(Rational(5, 8)) *
              GammaExpr::gamma(Rational(3, 4)))
                 .canonical();
    CHECK(e.gamma_factors().empty());
    // 2^(3/4) sqrt(pi) * 2^(1/2) sqrt(pi) * sqrt(pi)
    CHECK(e.two_exponent() == Rational(5, 4));
    CHECK(e.sqrt_pi_exponent() == 3);
    auto v = e.evaluate();
    CHECK_THAT(v.value, Catch::Matchers::WithinRel(
                            std::pow(2.0, 1.25) * std::pow(pi, 1.5), 1e-13));
  }
}

TEST_CASE("simplify wrapper telescopes shift pairs") {
  auto ratio = simplify(GammaExpr::gamma(Rational(6)) / GammaExpr::gamma(Rational(5)));
  REQUIRE(ratio.is_exact_rational());
  CHECK(ratio.exact_value() == 5);
  auto half = simplify(GammaExpr::gamma(Rational(7, 2)) / GammaExpr::gamma(Rational(3, 2)));
  REQUIRE(half.is_exact_rational());
  CHECK(half.exact_value() == Rational(15, 4));
}

TEST_CASE("exactness classification") {
  CHECK(GammaExpr::from_rational(Rational(3, 7)).is_exact_rational());
  auto half_two = GammaExpr::from_rational(Rational(5)).mul_power_of_two(Rational(1, 2));
  CHECK_FALSE(half_two.is_exact_rational());
  CHECK_FALSE(half_two.is_pi_exact());
  auto pi_even = GammaExpr::from_rational(Rational(2)).mul_sqrt_pi_power(-2);
  CHECK_FALSE(pi_even.is_exact_rational());  // 2/pi is not rational
  REQUIRE(pi_even.is_pi_exact());
  CHECK(format_pi_exact(pi_even) == "(2)*pi^(-1)");
  auto odd = GammaExpr::from_rational(Rational(1)).mul_sqrt_pi_power(-1);
  CHECK(format_pi_exact(odd) == "(1)*pi^(-1/2)");
  auto e = GammaExpr::from_rational(Rational(3)).mul_power_of_two(Rational(-2));
  REQUIRE(e.is_exact_rational());
  CHECK(e.exact_value() == Rational(3, 4));
}

TEST_CASE("pole and zero classification") {
  auto p = GammaExpr::gamma(Rational(0));
  CHECK(p.has_pole_factor());
  CHECK(p.canonical().has_pole_factor());
  CHECK(p.evaluate().kind == GammaExpr::Numeric::Kind::Pole);
  CHECK(p.evaluate().order == 1);

  auto p2 = GammaExpr::gamma(Rational(-2), 2).evaluate();
  CHECK(p2.kind == GammaExpr::Numeric::Kind::Pole);
  CHECK(p2.order == 2);

  auto z = GammaExpr::gamma(Rational(-1), -1).evaluate();
  CHECK(z.kind == GammaExpr::Numeric::Kind::Zero);
  CHECK(z.order == 1);

  SECTION("cancelling poles leave the limit of the ratio") {
    auto r = (GammaExpr::gamma(Rational(0)) / GammaExpr::gamma(Rational(-3))).evaluate();
    REQUIRE(r.kind == GammaExpr::Numeric::Kind::Finite);
    // lim Gamma(eps)/Gamma(-3+eps) = (-1)^3 3! = -6
    CHECK_THAT(r.value, Catch::Matchers::WithinRel(-6.0, 1e-12));
  }
}

TEST_CASE("numeric evaluation matches closed forms") {
  auto e = (GammaExpr::gamma(Rational(1, 3)) * GammaExpr::gamma(Rational(2, 3))).evaluate();
  REQUIRE(e.kind == GammaExpr::Numeric::Kind::Finite);
  CHECK_THAT(e.value, Catch::Matchers::WithinRel(pi / std::sin(pi / 3.0), 1e-14));

  auto neg = GammaExpr::gamma(Rational(-1, 2)).evaluate();  // -2 sqrt(pi)
  CHECK_THAT(neg.value, Catch::Matchers::WithinRel(-2.0 * std::sqrt(pi), 1e-14));
}

namespace {

GammaExpr random_expr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 4), exp(-2, 2), nfac(1, 6);
  GammaExpr e = GammaExpr::from_rational(Rational(num(rng), den(rng)));
  e.mul_power_of_two(Rational(exp(rng)));
  e.mul_sqrt_pi_power(exp(rng));
  int n = nfac(rng);
  for (int i = 0; i < n; ++i) {
    int x = exp(rng);
    if (x == 0) continue;
    e.mul_gamma(Rational(num(rng), den(rng)), x);  // args in (0, 10], never at a pole
  }
  return e;
}

}  // namespace

TEST_CASE("canonicalization properties on random expressions") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    GammaExpr e = random_expr(rng);
    GammaExpr c = e.canonical();
    // idempotent
    CHECK(c.canonical() == c);
    // canonical arguments lie in (0,1), excluding 1/2
    for (const auto& [a, x] : c.gamma_factors()) {
      CHECK(x != 0);
      CHECK(a > 0);
      CHECK(a < 1);
      CHECK(a != Rational(1, 2));
    }
    // numeric agreement raw vs canonical
    auto ve = e.evaluate(), vc = c.evaluate();
    REQUIRE(ve.kind == GammaExpr::Numeric::Kind::Finite);
    REQUIRE(vc.kind == GammaExpr::Numeric::Kind::Finite);
    CHECK_THAT(vc.value, Catch::Matchers::WithinRel(ve.value, 1e-13));
  }
}

TEST_CASE("complex log gamma") {
  SECTION("real spot values") {
    CHECK_THAT(std::exp(log_gamma({0.5, 0.0})).real(),
               Catch::Matchers::WithinRel(std::sqrt(pi), 1e-14));
    CHECK_THAT(std::exp(log_gamma({6.0, 0.0})).real(), Catch::Matchers::WithinRel(120.0, 1e-14));
  }
  SECTION("conjugate symmetry") {
    std::complex<double> z{1.7, 2.3};
    auto a = log_gamma(z), b = log_gamma(std::conj(z));
    CHECK_THAT(a.real(), Catch::Matchers::WithinAbs(b.real(), 1e-13));
    CHECK_THAT(a.imag(), Catch::Matchers::WithinAbs(-b.imag(), 1e-13));
  }
  SECTION("recurrence Gamma(z+1) = z Gamma(z)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> re(0.1, 10.0), im(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
      std::complex<double> z{re(rng), im(rng)};
      std::complex<double> d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
      CHECK(std::abs(std::exp(d) - 1.0) < 1e-13);
    }
  }
  SECTION("duplication formula at random complex points") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> re(0.05, 10.0), im(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
      std::complex<double> z{re(rng), im(rng)};
      std::complex<double> lhs = log_gamma(2.0 * z);
      std::complex<double> rhs = (2.0 * z - 1.0) * std::numbers::ln2 -
                                 0.5 * std::log(pi) + log_gamma(z) + log_gamma(z + 0.5);
      CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-13);
    }
  }
  SECTION("reflection region") {
    std::complex<double> z{-1.3, 0.4};
    // check against Gamma(z) = Gamma(z+2) / (z (z+1))
    std::complex<double> direct = std::exp(log_gamma(z));
    std::complex<double> shifted = std::exp(log_gamma(z + 2.0)) / (z * (z + 1.0));
    CHECK(std::abs(direct - shifted) < 1e-13 * std::abs(shifted));
  }
  SECTION("pole detection") {
    CHECK(gamma_is_pole({0.0, 0.0}));
    CHECK(gamma_is_pole({-3.0, 0.0}));
    CHECK(gamma_is_pole({-3.0 + 1e-13, 1e-13}));
    CHECK_FALSE(gamma_is_pole({-3.5, 0.0}));
    CHECK_FALSE(gamma_is_pole({2.0, 0.0}));
    CHECK_FALSE(gamma_is_pole({-3.0, 0.5}));
  }
}
