#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "guessing/analytic.hpp"
#include "guessing/payoff.hpp"
#include "guessing/rng.hpp"
#include "guessing/series.hpp"
#include "guessing/verify.hpp"

using namespace guessing;

TEST_CASE("best-response curve vanishes on the two-player closed-form support") {
  StrategyCdf f = StrategyCdf::pir2_closed_form();
  GameSpec spec(2, Rule::PriceIsRight);
  for (int i = 0; i <= 100; ++i) {
    double x = 0.75 * i / 100.0;
    REQUIRE(std::abs(best_response_value(f, spec, x)) <= 1e-8);
  }
  // above the support the curve is 1.5 - 2x, never profitable
  for (double x : {0.75, 0.8, 0.9, 1.0}) {
    double v = best_response_value(f, spec, x);
    CHECK(v == doctest::Approx(1.5 - 2.0 * x).epsilon(1e-8));
    CHECK(v <= 1e-12);
  }
}

TEST_CASE("best-response curve matches hand values for a uniform opponent") {
  // v(x) = x - (3/2) x^2 for two-player PriceIsRight against Uniform(0,1)
  StrategyCdf f = StrategyCdf::uniform(0.0, 1.0);
  GameSpec spec(2, Rule::PriceIsRight);
  for (double x : {0.0, 0.2, 0.5, 0.9}) {
    CHECK(best_response_value(f, spec, x) ==
          doctest::Approx(x - 1.5 * x * x).epsilon(1e-12));
  }
}

TEST_CASE("three-player ClosestWins uniform solution has a flat curve") {
  StrategyCdf f = StrategyCdf::uniform(0.25, 0.75);
  GameSpec spec(3, Rule::ClosestWins);
  for (double x : {0.3, 0.5, 0.7}) {
    REQUIRE(std::abs(best_response_value(f, spec, x)) <= 1e-8);
  }
}

TEST_CASE("certification of the analytic solutions") {
  GameSpec pir2(2, Rule::PriceIsRight);
  auto report = certify(StrategyCdf::pir2_closed_form(), pir2, 1e-6);
  CHECK(report.pass);
  CHECK(report.max_abs_on_support <= 1e-6);
  CHECK(report.max_positive_off_support == 0.0);
  CHECK(std::abs(report.game_value_per_player) <= 1e-6);

  GameSpec cw3(3, Rule::ClosestWins);
  auto cw3_report = certify(StrategyCdf::uniform(0.25, 0.75), cw3, 1e-6);
  CHECK(cw3_report.pass);

  GameSpec cw2(2, Rule::ClosestWins);
  auto cw2_report = certify(StrategyCdf::point_mass(0.5), cw2, 1e-6);
  CHECK(cw2_report.pass);
  CHECK(cw2_report.game_value_per_player == 0.0);
}

TEST_CASE("uniform strategy fails two-player PriceIsRight certification") {
  GameSpec pir2(2, Rule::PriceIsRight);
  auto report = certify(StrategyCdf::uniform(0.0, 1.0), pir2, 1e-6);
  CHECK_FALSE(report.pass);
  CHECK(report.max_abs_on_support > 0.01);
}

TEST_CASE("point-mass opponents reduce to exact expectations") {
  GameSpec cw2(2, Rule::ClosestWins);
  StrategyCdf atom = StrategyCdf::point_mass(0.5);
  // win region (0.55, 1] has length 0.45: v = 2 * 0.45 - 1
  CHECK(best_response_value(atom, cw2, 0.6) == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(best_response_value(atom, cw2, 0.5) == 0.0);
  CHECK(profile_value(atom, cw2) == 0.0);
}

TEST_CASE("profile value vanishes for symmetric profiles") {
  GameSpec pir2(2, Rule::PriceIsRight);
  CHECK(std::abs(profile_value(StrategyCdf::pir2_closed_form(), pir2)) <= 1e-8);
  CHECK(std::abs(profile_value(StrategyCdf::uniform(0.0, 1.0), pir2)) <= 1e-8);

  GameSpec cw3(3, Rule::ClosestWins);
  CHECK(std::abs(profile_value(StrategyCdf::uniform(0.25, 0.75), cw3)) <= 1e-8);
}

TEST_CASE("series solutions certify at the series tolerance") {
  GameSpec pir3(3, Rule::PriceIsRight);
  auto pir3_report = certify(StrategyCdf::series(solve_pir3()), pir3, 1e-3);
  CHECK(pir3_report.pass);

  GameSpec cw4(4, Rule::ClosestWins);
  auto cw4_report = certify(solve_cw4().strategy, cw4, 1e-3);
  CHECK(cw4_report.pass);
}

TEST_CASE("discrete certification matches the finite-game values") {
  DiscreteProfile p;
  p.probs = {0.5, 0.5};
  auto report = certify_discrete(p, Rule::PriceIsRight, 3, 1e-9);
  CHECK(report.pass);
  CHECK(report.method == VerifyMethod::DiscreteExact);

  DiscreteProfile q;
  q.probs = {1.0, 0.0};
  auto failing = certify_discrete(q, Rule::PriceIsRight, 3, 1e-9);
  CHECK_FALSE(failing.pass);
  CHECK(failing.max_positive_off_support == doctest::Approx(0.5));
}

TEST_CASE("monte carlo oracle is reproducible and matches quadrature") {
  GameSpec cw2(2, Rule::ClosestWins);
  StrategyCdf atom = StrategyCdf::point_mass(0.5);
  auto first = monte_carlo_value(atom, cw2, 0.6, 100000, 7);
  auto second = monte_carlo_value(atom, cw2, 0.6, 100000, 7);
  CHECK(first.value == second.value);  // bitwise determinism per seed
  CHECK(std::abs(first.value - (-0.1)) <= 3.0 * first.std_error);

  SplitMix64 rng(301);
  struct Case {
    StrategyCdf f;
    GameSpec spec;
  };
  std::vector<Case> cases;
  cases.push_back({StrategyCdf::pir2_closed_form(), GameSpec(2, Rule::PriceIsRight)});
  cases.push_back({StrategyCdf::uniform(0.0, 1.0), GameSpec(2, Rule::PriceIsRight)});
  cases.push_back({StrategyCdf::uniform(0.25, 0.75), GameSpec(3, Rule::ClosestWins)});
  cases.push_back({StrategyCdf::uniform(0.2, 0.9), GameSpec(4, Rule::ClosestWins)});
  cases.push_back({StrategyCdf::pir2_closed_form(), GameSpec(3, Rule::PriceIsRight)});
  for (int trial = 0; trial < 20; ++trial) {
    const Case& c = cases[trial % cases.size()];
    double x = rng.uniform();
    double exact = best_response_value(c.f, c.spec, x);
    auto mc = monte_carlo_value(c.f, c.spec, x, 200000, 1000 + trial);
    REQUIRE(std::abs(mc.value - exact) <= 3.0 * mc.std_error + 1e-9);
  }
}

TEST_CASE("verifier rejects unsupported inputs") {
  GameSpec pir2(2, Rule::PriceIsRight);
  DiscreteProfile p;
  p.probs = {0.5, 0.5};
  CHECK_THROWS_AS(best_response_value(StrategyCdf::discrete(p), pir2, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(best_response_value(StrategyCdf::pir2_closed_form(), pir2, 1.5),
                  std::domain_error);
  GameSpec general(2, Rule::PriceIsRight,
                   TargetModel::table({{0.0, 0.0}, {2.0, 1.0}}));
  CHECK_THROWS_AS(best_response_value(StrategyCdf::pir2_closed_form(), general, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(monte_carlo_value(StrategyCdf::pir2_closed_form(), pir2,
                                    std::nullopt, 0, 1),
                  std::domain_error);
}

TEST_CASE("parallel and serial best-response curves agree bitwise") {
  StrategyCdf f = StrategyCdf::pir2_closed_form();
  GameSpec spec(2, Rule::PriceIsRight);
  std::vector<double> grid;
  for (int i = 0; i <= 64; ++i) grid.push_back(i / 64.0);
  CHECK(best_response_curve(f, spec, grid) == best_response_curve_serial(f, spec, grid));
}
