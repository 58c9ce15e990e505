#include <catch2/catch_amalgamated.hpp>

#include "horokit/verify.hpp"

using namespace horokit;
using Catch::Approx;

TEST_CASE("rank one model detection") {
  CHECK(rank_one_model(catalog_space("hyperbolic-real-2")) == RankOneGroup::SL2R);
  CHECK(rank_one_model(catalog_space("hyperbolic-real-3")) == RankOneGroup::SL2C);
  CHECK(rank_one_model(catalog_space("sl2c")) == RankOneGroup::SL2C);
  CHECK_FALSE(rank_one_model(catalog_space("hyperbolic-real-4")).has_value());
  CHECK_FALSE(rank_one_model(catalog_space("slnr-son-3")).has_value());
  CHECK_FALSE(rank_one_model(catalog_space("complex-hyperbolic-2")).has_value());
}

TEST_CASE("integral oracle report on both model groups") {
  for (const char* key : {"hyperbolic-real-2", "sl2c"}) {
    auto rs = catalog_space(key);
    VerifyReport r = verify_iwasawa(rs);
    // 1 normalization + 5 real + 2 complex * 2 components
    REQUIRE(r.cases.size() == 10);
    CHECK(r.all_pass());
    for (const auto& c : r.cases) {
      CHECK(c.oracle == "iwasawa");
      CHECK(c.abs_err <= 1e-6);
    }
    CHECK(r.cases[0].name == "cbar(rho) = 1");
    CHECK(r.cases[0].expected == 1.0);
    CHECK(r.cases[1].name == "lambda = 3/4");
    CHECK(r.cases[6].name == "lambda = 1+1i (re)");
    CHECK(r.cases[7].name == "lambda = 1+1i (im)");
    // the two component rows share the modulus error
    CHECK(r.cases[6].abs_err == r.cases[7].abs_err);
  }
}

TEST_CASE("integral oracle rejects spaces without a model group") {
  CHECK_THROWS_AS(verify_iwasawa(catalog_space("slnr-son-3")), std::invalid_argument);
  CHECK_THROWS_AS(verify_iwasawa(catalog_space("hyperbolic-real-4")), std::invalid_argument);
}

TEST_CASE("representation oracle report") {
  auto rs = catalog_space("hyperbolic-real-2");
  VerifyOptions opt;
  opt.max_l = 5;
  VerifyReport r = verify_rep(rs, opt);
  REQUIRE(r.cases.size() == 6);
  CHECK(r.all_pass());
  CHECK(r.cases[0].name == "l = 0");
  CHECK(r.cases[0].expected == 1.0);
  CHECK(r.cases[0].actual == 1.0);
  CHECK(r.cases[3].expected == Approx(5.0 / 16.0));
  for (const auto& c : r.cases) CHECK(c.abs_err <= 1e-10);
  CHECK_THROWS_AS(verify_rep(catalog_space("sl2c")), std::invalid_argument);
}

TEST_CASE("asymptotic oracle report") {
  auto rs = catalog_space("hyperbolic-real-2");
  VerifyOptions opt;
  opt.max_l = 4;
  VerifyReport r = verify_asymptotic(rs, opt);
  REQUIRE(r.cases.size() == 5);
  CHECK(r.all_pass());
  for (const auto& c : r.cases) CHECK(c.abs_err <= 1e-6);
  CHECK_THROWS_AS(verify_asymptotic(catalog_space("sl2c")), std::invalid_argument);
}

TEST_CASE("combined report covers every applicable oracle") {
  auto rs = catalog_space("hyperbolic-real-2");
  VerifyReport r = verify_all(rs);
  REQUIRE(r.cases.size() == 10 + 6 + 6);
  CHECK(r.all_pass());
  VerifyReport c = verify_all(catalog_space("sl2c"));
  REQUIRE(c.cases.size() == 10);
  for (const auto& row : c.cases) CHECK(row.oracle == "iwasawa");
  CHECK_THROWS_AS(verify_all(catalog_space("slnr-son-3")), std::invalid_argument);
}

TEST_CASE("tolerance override flips marginal cases") {
  auto rs = catalog_space("hyperbolic-real-2");
  VerifyOptions strict;
  strict.tol = 1e-18;  // below quadrature resolution
  VerifyReport r = verify_iwasawa(rs, strict);
  CHECK_FALSE(r.all_pass());
  VerifyOptions loose;
  loose.tol = 1.0;
  CHECK(verify_iwasawa(rs, loose).all_pass());
}

TEST_CASE("report serialization") {
  VerifyReport r;
  r.cases.push_back({"rep", "l = 1", 0.5, 0.5, 0.0, true});
  r.cases.push_back({"iwasawa", "lambda = 2", 0.25, 0.2500001, 1e-7, false});
  SECTION("json") {
    nlohmann::json j = verify_report_json(r);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["oracle"] == "rep");
    CHECK(j[0]["case"] == "l = 1");
    CHECK(j[0]["expected"] == 0.5);
    CHECK(j[0]["pass"] == true);
    CHECK(j[1]["abs_err"] == 1e-7);
    CHECK(j[1]["pass"] == false);
  }
  SECTION("text rows") {
    std::string t = verify_report_text(r);
    CHECK(t.find("PASS  rep  l = 1") == 0);
    CHECK(t.find("FAIL  iwasawa  lambda = 2") != std::string::npos);
    CHECK(t.find("expected 0.5, actual 0.5, abs_err 0") != std::string::npos);
  }
  SECTION("csv") {
    std::string c = verify_report_csv(r);
    CHECK(c.rfind("oracle;case;expected;actual;abs_err;pass\n", 0) == 0);
    CHECK(c.find("rep;l = 1;0.5;0.5;0;true") != std::string::npos);
    CHECK(c.find(";false") != std::string::npos);
  }
}

TEST_CASE("quadrature options propagate to the integral oracle") {
  auto rs = catalog_space("hyperbolic-real-2");
  VerifyOptions opt;
  opt.quadrature.node_budget = 64;  // too small for the default target
  CHECK_THROWS_AS(verify_iwasawa(rs, opt), QuadratureFailure);
}
