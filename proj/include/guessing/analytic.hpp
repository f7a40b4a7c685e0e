#pragma once

#include "guessing/strategy.hpp"
#include "guessing/types.hpp"

namespace guessing {

// An optimal strategy together with the game it solves and the guaranteed
// value per player (0 for all the symmetric games here).
struct ClosedFormSolution {
  StrategyCdf strategy;
  GameSpec game;
  double value_per_player = 0.0;
};

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Two-player Price-Is-Right optimum: F(x) = 1/sqrt(1-x) - 1 on [0, 3/4].
ClosedFormSolution two_player_pir_cdf();

// Residual of the ODE the two-player solution satisfies:
// 2(x-1) F'(x) + 1 + F(x). Requires a differentiable representation.
double pir2_ode_residual(const StrategyCdf& f, double x);

// Least upper bound 1 - 1/n + 1/n^2 for guesses in the n-player
// Price-Is-Right game, as an exact rational.
Rational pir_support_upper_bound(int players);

// Probability that both players guess above the target under the two-player
// Price-Is-Right optimum, integral of (1 - F(r))^2 by quadrature; equals
// ln 4 - 1.
double prob_both_too_high();

// Two-player Closest-Wins saddle point: always guess 1/2.
ClosedFormSolution two_player_cw_strategy();

// Three-player Closest-Wins optimum: uniform on [1/4, 3/4].
ClosedFormSolution three_player_cw_strategy();

// Strategy with CDF x -> F(G(x)): the optimum for a general strictly
// increasing target CDF G, given the uniform-target optimum F.
StrategyCdf compose_with_target(const StrategyCdf& f, const TargetModel& g);

}  // namespace guessing
