#include "guessing/analytic.hpp"

#include <cmath>

#include "guessing/quadrature.hpp"

namespace guessing {

ClosedFormSolution two_player_pir_cdf() {
  return {StrategyCdf::pir2_closed_form(), GameSpec(2, Rule::PriceIsRight), 0.0};
}

double pir2_ode_residual(const StrategyCdf& f, double x) {
  if (!f.has_density())
    throw std::domain_error("pir2_ode_residual: representation is not differentiable");
  return 2.0 * (x - 1.0) * f.density(x) + 1.0 + f.evaluate(x);
}

Rational pir_support_upper_bound(int players) {
  if (players < 2) throw std::domain_error("pir_support_upper_bound: need n >= 2");
  long long n = players;
  return {n * n - n + 1, n * n};  // already in lowest terms
}

double prob_both_too_high() {
  StrategyCdf f = StrategyCdf::pir2_closed_form();
  double u = f.support_hi();
  return integrate_segments(
      [&](double r) {
        double t = 1.0 - f.evaluate(r);
        return t * t;
      },
      0.0, u, {});
}

ClosedFormSolution two_player_cw_strategy() {
  return {StrategyCdf::point_mass(0.5), GameSpec(2, Rule::ClosestWins), 0.0};
}

ClosedFormSolution three_player_cw_strategy() {
  return {StrategyCdf::uniform(0.25, 0.75), GameSpec(3, Rule::ClosestWins), 0.0};
}

StrategyCdf compose_with_target(const StrategyCdf& f, const TargetModel& g) {
  if (g.is_uniform_unit()) return f;
  return StrategyCdf::composed(f, g);
}

}  // namespace guessing
