#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "guessing/discrete.hpp"
#include "guessing/strategy.hpp"
#include "guessing/types.hpp"

namespace guessing {

enum class VerifyMethod { Quadrature, MonteCarlo, DiscreteExact };

// Numerical certificate that a symmetric profile of the candidate strategy
// is (or is not) an equilibrium: the best-response value curve must vanish
// on the support and stay nonpositive off it.
struct EquilibriumReport {
  Rule rule = Rule::PriceIsRight;
  int players = 2;
  VerifyMethod method = VerifyMethod::Quadrature;
  double tol = 1e-6;
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<bool> on_support;
  double max_abs_on_support = 0.0;
  double max_positive_off_support = 0.0;
  double game_value_per_player = 0.0;
  bool pass = false;
  long long mc_samples = 0;
  std::uint64_t mc_seed = 0;
};

// Expected payoff v(x) to a player guessing x while the other players-1
// draw i.i.d. from f. Uniform-unit target only. Computed by piecewise
// Gauss-Legendre quadrature of the order-statistic reduction; for point-mass
// opponents the exact piecewise expectation is used instead. Discrete and
// composed representations are not supported here (use certify, which
// handles discrete profiles exactly).
double best_response_value(const StrategyCdf& f, const GameSpec& spec, double x);

// v(x) over a grid; OpenMP-parallel across grid points.
std::vector<double> best_response_curve(const StrategyCdf& f, const GameSpec& spec,
                                        const std::vector<double>& grid);
std::vector<double> best_response_curve_serial(const StrategyCdf& f, const GameSpec& spec,
                                               const std::vector<double>& grid);

// Expected payoff per player when all n players draw from f, as the integral
// of the best-response curve against f itself.
double profile_value(const StrategyCdf& f, const GameSpec& spec);

// Certification run: best-response values on a support grid (default 512
// points) plus off-support grids (64 points per side inside [0,1]);
// PASS iff max |v| on support <= tol and max positive v off support <= tol.
EquilibriumReport certify(const StrategyCdf& f, const GameSpec& spec, double tol,
                          int grid_size = 512, int off_points = 64);

// Exact certification of a discrete profile via the finite-game
// best-response values; support = entries with p_i > atom_tol.
EquilibriumReport certify_discrete(const DiscreteProfile& p, Rule rule, int players,
                                   double tol, double atom_tol = 1e-9);

// Certification with every grid value estimated by Monte Carlo instead of
// quadrature. Works for all representations, including discrete profiles.
EquilibriumReport certify_monte_carlo(const StrategyCdf& f, const GameSpec& spec,
                                      double tol, int grid_size, int off_points,
                                      long long samples_per_point, std::uint64_t seed);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Independent Monte Carlo oracle: draws opponents by inverse-transform
// sampling from f, draws the target uniformly, and averages realized
// payoffs. With a deviation the first player guesses it; otherwise the
// first player draws from f as well (estimating profile_value).
// Deterministic per seed for any thread count: draws come from a
// counter-based generator and partial sums are reduced in fixed blocks.
McEstimate monte_carlo_value(const StrategyCdf& f, const GameSpec& spec,
                             std::optional<double> deviation, long long samples,
                             std::uint64_t seed);

}  // namespace guessing
