#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "guessing/payoff.hpp"
#include "guessing/quadrature.hpp"
#include "guessing/rng.hpp"
#include "guessing/series.hpp"

using namespace guessing;

namespace {
// printed reference values for the three-player PriceIsRight series
const double kPir3Coefficients[12] = {0.726193,  0.480269,  0.181628,  0.0444137,
                                      0.0509559, 0.0648413, 0.0363864, 0.0123602,
                                      0.0178371, 0.0244243, 0.0144697, 0.00535718};
}  // namespace

TEST_CASE("pir3 residual at the origin determines the quadratic coefficient") {
  // at x = 0: residual = 8 c1^2 - 6 c1^3 - 4 c2
  SeriesSolution s;
  double c1 = 0.7, c2 = 0.3;
  s.coefficients = {0.0, c1, c2};
  s.support_upper = 7.0 / 9.0;
  CHECK(pir3_ode_residual(s, 0.0) ==
        doctest::Approx(8 * c1 * c1 - 6 * c1 * c1 * c1 - 4 * c2).epsilon(1e-14));

  // solving it for c2 reproduces the printed quadratic coefficient
  c1 = kPir3Coefficients[0];
  double solved_c2 = 2.0 * c1 * c1 - 1.5 * c1 * c1 * c1;
  CHECK(solved_c2 == doctest::Approx(kPir3Coefficients[1]).epsilon(2e-4));

  // the zero series is a degenerate root of the numerator
  SeriesSolution zero;
  zero.coefficients = {0.0, 0.0, 0.0};
  CHECK(pir3_ode_residual(zero, 0.3) == 0.0);

  SeriesSolution empty;
  CHECK_THROWS_AS(pir3_ode_residual(empty, 0.0), std::domain_error);
}

TEST_CASE("solve_pir3 reproduces the printed coefficients") {
  SeriesSolution s = solve_pir3();
  REQUIRE(s.coefficients.size() >= 13);
  for (int k = 1; k <= 12; ++k)
    CHECK(std::abs(s.coefficients[k] - kPir3Coefficients[k - 1]) <= 1e-4);
}

TEST_CASE("solve_pir3 boundary conditions and monotonicity") {
  SeriesSolution s = solve_pir3(72, 1e-9);
  double u = 7.0 / 9.0;
  CHECK(s.value(0.0) == 0.0);
  CHECK(std::abs(s.value(u) - 1.0) <= 1e-9);
  for (int i = 0; i <= 400; ++i) {
    double x = u * i / 400.0;
    REQUIRE(s.derivative(x) >= 0.0);
  }
}

TEST_CASE("solve_pir3 leaves a small ODE residual across the support") {
  SeriesSolution s = solve_pir3();
  double u = 7.0 / 9.0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    double x = 0.01 + (u - 0.02) * i / 199.0;
    worst = std::max(worst, std::abs(pir3_ode_residual(s, x)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("pir3 order-statistic integral identity") {
  // Int_0^u x (1 - F) F' dx = 1/6 for the three-player game
  SeriesSolution s = solve_pir3();
  double value = integrate_segments(
      [&](double x) { return x * (1.0 - s.value(x)) * s.derivative(x); }, 0.0,
      7.0 / 9.0, {});
  CHECK(std::abs(value - 1.0 / 6.0) <= 1e-5);
}

TEST_CASE("pir3 truncation stability") {
  SeriesSolution a = solve_pir3(72);
  SeriesSolution b = solve_pir3(82);
  double u = 7.0 / 9.0;
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    double x = u * i / 500.0;
    worst = std::max(worst, std::abs(a.value(x) - b.value(x)));
  }
  CHECK(worst <= 1e-5);
}

TEST_CASE("solve_pir3 rejects bad arguments") {
  CHECK_THROWS_AS(solve_pir3(3), std::domain_error);
  CHECK_THROWS_AS(solve_pir3(40, -1.0), std::domain_error);
}

TEST_CASE("symmetrized four-player payoff closed form") {
  CHECK(cw4_symmetrized_payoff(0.1, 0.2, 0.3, 0.4) ==
        doctest::Approx(-0.05).epsilon(1e-14));

  // symmetric in the three opponents
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    double x = rng.uniform(), y = rng.uniform(), z = rng.uniform(), w = rng.uniform();
    double v = cw4_symmetrized_payoff(x, y, z, w);
    CHECK(cw4_symmetrized_payoff(x, z, y, w) == v);
    CHECK(cw4_symmetrized_payoff(x, w, z, y) == v);
    CHECK(cw4_symmetrized_payoff(x, y, w, z) == v);
  }
}

TEST_CASE("symmetrized payoff equals the 16-reflection average") {
  SplitMix64 rng(31);
  GameSpec cw4(4, Rule::ClosestWins);
  for (int trial = 0; trial < 50; ++trial) {
    double q[4] = {rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
    double average = 0.0;
    for (int signs = 0; signs < 16; ++signs) {
      GuessProfile profile(4);
      for (int i = 0; i < 4; ++i) {
        double sign = (signs >> i) & 1 ? 1.0 : -1.0;
        profile[i] = (1.0 + sign * q[i]) / 2.0;
      }
      average += expected_payoffs(cw4, profile)[0];
    }
    average /= 16.0;
    CHECK(cw4_symmetrized_payoff(q[0], q[1], q[2], q[3]) ==
          doctest::Approx(average).epsilon(1e-10));
  }
}

TEST_CASE("solve_cw4 constants match the printed values") {
  Cw4Solution sol = solve_cw4();

  // unit-slope series coefficients (x^3, x^5, x^7, x^9 with the scale removed)
  const double kUnitCoefficients[4] = {0.208333, 0.0864583, 0.0454861, 0.026982};
  double a = sol.constants.a;
  double apow = a * a * a;
  for (int k = 0; k < 4; ++k) {
    int power = 2 * k + 3;
    CHECK(std::abs(sol.fhat.coefficients[power] / apow - kUnitCoefficients[k]) <= 1e-5);
    apow *= a * a;
  }

  CHECK(std::abs(sol.constants.a - 1.27292) <= 1e-3);
  CHECK(std::abs(sol.constants.t_star - 0.82742) <= 1e-3);
  CHECK(std::abs(sol.constants.u - 0.650021) <= 1e-3);
  CHECK(std::abs(sol.constants.folded_lo - 0.174989) <= 1e-3);
  CHECK(std::abs(sol.constants.folded_hi - 0.825011) <= 1e-3);
  CHECK(sol.constants.u == doctest::Approx(sol.constants.t_star / sol.constants.a)
                               .epsilon(1e-12));

  // unfolded coefficients of (2x-1)^k are the folded ones halved
  const double kUnfolded[4] = {0.636459, 0.214848, 0.144471, 0.123155};
  for (int k = 0; k < 4; ++k) {
    int power = 2 * k + 1;
    CHECK(std::abs(sol.fhat.coefficients[power] / 2.0 - kUnfolded[k]) <= 1e-3);
  }
}

TEST_CASE("solve_cw4 satisfies its ODE and the closure identity") {
  Cw4Solution sol = solve_cw4();
  double u = sol.constants.u;

  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    double x = 0.01 + (u - 0.02) * i / 199.0;
    worst = std::max(worst, std::abs(cw4_ode_residual(sol.fhat, x)));
  }
  CHECK(worst <= 1e-6);

  // support-endpoint condition, via quadrature as an independent route
  double integral = integrate_segments(
      [&](double y) { return y * sol.fhat.value(y) * sol.fhat.derivative(y); }, 0.0, u,
      {});
  CHECK(std::abs(1.0 - u - 1.5 * integral) <= 1e-6);
}

TEST_CASE("unfolded strategy is symmetric about one half") {
  Cw4Solution sol = solve_cw4();
  const StrategyCdf& f = sol.strategy;
  CHECK(f.evaluate(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  for (int i = 0; i <= 100; ++i) {
    double s = 0.5 * i / 100.0;
    REQUIRE(std::abs(f.evaluate(0.5 - s) + f.evaluate(0.5 + s) - 1.0) <= 1e-10);
  }
  CHECK(f.evaluate(sol.constants.folded_lo) == doctest::Approx(0.0).margin(1e-9));
  CHECK(f.evaluate(sol.constants.folded_hi) == doctest::Approx(1.0).margin(1e-9));

  // monotone on its support
  double prev = -1.0;
  for (int i = 0; i <= 300; ++i) {
    double x = i / 300.0;
    double v = f.evaluate(x);
    REQUIRE(v >= prev);
    prev = v;
  }
}

TEST_CASE("cw4 truncation stability") {
  Cw4Solution a = solve_cw4(41);
  Cw4Solution b = solve_cw4(46);
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    double x = i / 500.0;
    worst = std::max(worst, std::abs(a.strategy.evaluate(x) - b.strategy.evaluate(x)));
  }
  CHECK(worst <= 1e-5);
}

TEST_CASE("unfold_symmetric rejects non-odd series") {
  SeriesSolution even;
  even.coefficients = {0.0, 0.5, 0.25};
  even.support_upper = 1.0;
  CHECK_THROWS_AS(unfold_symmetric(even, 1.0), std::domain_error);
}
