#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "guessing/analytic.hpp"
#include "guessing/payoff.hpp"
#include "guessing/quadrature.hpp"

using namespace guessing;

TEST_CASE("two-player PriceIsRight closed form") {
  auto solution = two_player_pir_cdf();
  const StrategyCdf& f = solution.strategy;
  CHECK(f.evaluate(0.0) == 0.0);
  CHECK(f.evaluate(0.75) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.density(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(solution.value_per_player == 0.0);
  for (int i = 0; i <= 100; ++i) {
    double x = 0.75 * i / 100.0;
    CHECK(std::abs(f.evaluate(x) - (1.0 / std::sqrt(1.0 - x) - 1.0)) <= 1e-12);
  }
}

TEST_CASE("closed form satisfies its first-order ODE") {
  StrategyCdf f = StrategyCdf::pir2_closed_form();
  CHECK(std::abs(pir2_ode_residual(f, 0.5)) <= 1e-12);
  for (int i = 1; i < 50; ++i) {
    double x = 0.75 * i / 50.0;
    CHECK(std::abs(pir2_ode_residual(f, x)) <= 1e-10);
    // cross-check the analytic density with a central difference
    double h = 1e-6;
    double numeric = (f.evaluate(x + h) - f.evaluate(x - h)) / (2.0 * h);
    CHECK(f.density(x) == doctest::Approx(numeric).epsilon(1e-7));
  }

  // a uniform strategy does not satisfy it
  StrategyCdf uniform = StrategyCdf::uniform(0.0, 1.0);
  CHECK(pir2_ode_residual(uniform, 0.5) == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(pir2_ode_residual(StrategyCdf::point_mass(0.5), 0.5),
                  std::domain_error);
}

TEST_CASE("support upper bounds are exact rationals") {
  CHECK(pir_support_upper_bound(2).num == 3);
  CHECK(pir_support_upper_bound(2).den == 4);
  CHECK(pir_support_upper_bound(3).num == 7);
  CHECK(pir_support_upper_bound(3).den == 9);
  CHECK(pir_support_upper_bound(4).num == 13);
  CHECK(pir_support_upper_bound(4).den == 16);
  CHECK_THROWS_AS(pir_support_upper_bound(1), std::domain_error);
}

TEST_CASE("probability that both players guess too high") {
  double p = prob_both_too_high();
  CHECK(std::abs(p - (std::log(4.0) - 1.0)) <= 1e-8);
  CHECK(p == doctest::Approx(0.3862944).epsilon(1e-6));

  // the integrand at its endpoints
  StrategyCdf f = StrategyCdf::pir2_closed_form();
  auto integrand = [&](double r) {
    double t = 1.0 - f.evaluate(r);
    return t * t;
  };
  CHECK(integrand(0.0) == doctest::Approx(1.0));
  CHECK(integrand(0.75) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("order-statistic integral identity for the two-player solution") {
  // Int_0^u x (1 - F)^{n-2} F' dx = 1/(n(n-1)); for n = 2 the value is 1/2.
  StrategyCdf f = StrategyCdf::pir2_closed_form();
  double value = integrate_segments(
      [&](double x) { return x * f.density(x); }, 0.0, 0.75, {});
  CHECK(std::abs(value - 0.5) <= 1e-8);
}

TEST_CASE("two-player ClosestWins saddle point") {
  auto solution = two_player_cw_strategy();
  CHECK(solution.strategy.quantile(0.5) == doctest::Approx(0.5));
  CHECK(solution.value_per_player == 0.0);

  GameSpec cw2(2, Rule::ClosestWins);
  CHECK(expected_payoffs(cw2, {0.5, 0.5}) == std::vector<double>{0.0, 0.0});
  // any deviation by the opponent hands the first player a profit
  for (double y : {0.0, 0.1, 0.3, 0.45, 0.55, 0.9, 1.0}) {
    double payoff = expected_payoffs(cw2, {0.5, y})[0];
    CHECK(payoff > 0.0);
    CHECK(payoff == doctest::Approx(std::abs(y - 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("three-player ClosestWins uniform solution") {
  auto solution = three_player_cw_strategy();
  const StrategyCdf& f = solution.strategy;
  CHECK(f.evaluate(0.5) == doctest::Approx(0.5));
  CHECK(f.support_lo() == doctest::Approx(0.25));
  CHECK(f.support_hi() == doctest::Approx(0.75));
  for (double x : {0.3, 0.5, 0.7}) CHECK(f.density(x) == doctest::Approx(2.0));
}

TEST_CASE("composition with a general target CDF") {
  StrategyCdf pir2 = StrategyCdf::pir2_closed_form();
  TargetModel half = TargetModel::table({{0.0, 0.0}, {2.0, 1.0}});  // G(x) = x/2
  StrategyCdf composed = compose_with_target(pir2, half);
  CHECK(composed.support_hi() == doctest::Approx(1.5));
  CHECK(composed.evaluate(1.0) == doctest::Approx(pir2.evaluate(0.5)).epsilon(1e-14));

  // identity target leaves the strategy untouched
  StrategyCdf same = compose_with_target(pir2, TargetModel::uniform_unit());
  for (int i = 0; i <= 20; ++i) {
    double x = i / 20.0;
    CHECK(same.evaluate(x) == pir2.evaluate(x));
  }

  // G(x) = x^2 maps sqrt(1/2) to the uniform midpoint
  std::vector<std::pair<double, double>> knots;
  for (int i = 0; i <= 1000; ++i) {
    double x = i / 1000.0;
    knots.push_back({x, x * x});
  }
  TargetModel square = TargetModel::table(knots);
  StrategyCdf cw3 = compose_with_target(StrategyCdf::uniform(0.25, 0.75), square);
  CHECK(cw3.evaluate(std::sqrt(0.5)) == doctest::Approx(0.5).epsilon(1e-6));

  // composed CDFs stay monotone within [0,1]
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    double v = composed.evaluate(2.0 * i / 100.0);
    CHECK(v >= prev);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }

  // quantile round trip through the composition
  for (double p : {0.1, 0.5, 0.9}) {
    double x = composed.quantile(p);
    CHECK(composed.evaluate(x) == doctest::Approx(p).epsilon(1e-10));
  }
}
