#pragma once

#include "guessing/strategy.hpp"

namespace guessing {

// --- Three-player Price-Is-Right ------------------------------------------

// Numerator of the ODE satisfied by the three-player Price-Is-Right optimum:
// 8F'^2 - 2FF'^2 - 6F'^3 + 6xF'^3 - 2F'' - 2FF'' + F^2 F''.
double pir3_ode_residual(const SeriesSolution& f, double x);

// Power-series solution on [0, 7/9]. Coefficients follow recursively from
// the ODE once the leading coefficient is fixed; the leading coefficient is
// found by shooting on the boundary condition F(7/9) = 1 (bisection over
// [0.5, 1.0]). tol bounds the boundary mismatch of the returned series.
SeriesSolution solve_pir3(int order = 72, double tol = 1e-9);

// --- Four-player Closest-Wins ---------------------------------------------

// Payoff to the first player in the four-player Closest-Wins game folded
// about 1/2: the average of the raw game over the 16 reflections
// (1 +- x)/2, ..., (1 +- w)/2. Closed form, symmetric in (y, z, w).
double cw4_symmetrized_payoff(double x, double y, double z, double w);

// Numerator of the ODE satisfied by the folded-game CDF:
// -18 f f'^4 - 12 x f'^5 + 21 f'^2 f'' + 9 f^2 f'^2 f'' - 9 f f''^2
// - 3 f^3 f''^2 + 3 f f' f''' + f^3 f' f'''.
double cw4_ode_residual(const SeriesSolution& fhat, double x);

struct Cw4Constants {
  double a = 0.0;       // slope of the folded CDF at 0
  double t_star = 0.0;  // root of the unit-slope series at value 1
  double u = 0.0;       // folded support upper end, t_star / a
  double folded_lo = 0.0, folded_hi = 0.0;  // support of the unfolded CDF
};

struct Cw4Solution {
  SeriesSolution fhat;     // odd series for the folded CDF on [0, u]
  Cw4Constants constants;
  StrategyCdf strategy;    // unfolded CDF on [folded_lo, folded_hi]
};

// Solves the folded-game ODE by an odd power series with unit leading
// coefficient, locates the root t* of the unit-slope series at value 1,
// recovers the scale a from the support-endpoint condition
// 0 = 1 - u - (3/2) Int_0^u y f(y) f'(y) dy, and unfolds.
// odd_terms counts the retained odd powers (1, 3, ..., 2*odd_terms - 1).
Cw4Solution solve_cw4(int odd_terms = 41, double tol = 1e-9);

// CDF F(x) = 1/2 + fhat(2x - 1)/2 on [(1-u)/2, (1+u)/2]. fhat must be odd
// (the construction presumes F(1/2 - s) = 1 - F(1/2 + s)).
StrategyCdf unfold_symmetric(const SeriesSolution& fhat, double u);

}  // namespace guessing
