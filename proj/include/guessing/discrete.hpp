#pragma once

#include <vector>

#include "guessing/strategy.hpp"
#include "guessing/types.hpp"

namespace guessing {

// Configuration for the fictitious-play-style iteration on the finite game
// with targets uniform on {1..N}.
struct ApproxConfig {
  int grid_size = 50;       // N
  double epsilon = 0.001;   // step constant
  int iterations = 5000;
  int players = 3;
  Rule rule = Rule::PriceIsRight;
  int log_every = 100;          // diagnostics cadence
  double early_stop_tol = -1.0; // stop once max_i v_i drops below; off when negative

  void validate() const;
};

// Expected payoff to the first guesser, averaged over the target uniform on
// {1..N}. Guesses are 1-based grid indices. Ties split the pot; under
// PriceIsRight a target above every guess pays everyone 0, and under
// ClosestWins guesses equidistant from the target share the win.
double discrete_expected_payoff(Rule rule, int players, int grid_size,
                                const std::vector<int>& guesses);

// v_i = expected payoff of guessing i against players-1 opponents drawn
// i.i.d. from p. Computed in O(N^2) for any player count via prefix sums
// over the opponent distribution; OpenMP-parallel across i.
std::vector<double> best_response_values(const DiscreteProfile& p, const ApproxConfig& cfg);

// Serial reference for the kernel above; identical arithmetic per entry.
std::vector<double> best_response_values_serial(const DiscreteProfile& p,
                                                const ApproxConfig& cfg);

// One update: r_i = p_i + epsilon * max(0, v_i), then rescale to a
// probability vector.
DiscreteProfile step(const DiscreteProfile& p, const ApproxConfig& cfg);

struct IterationLog {
  int iteration = 0;
  double max_v = 0.0;
  std::vector<double> p;
  std::vector<double> v;
};

struct RunResult {
  DiscreteProfile profile;
  std::vector<IterationLog> logs;
  int iterations_completed = 0;
  double final_max_v = 0.0;
};

// Iterates step() from the uniform profile (or the provided start). The
// whole run is deterministic: there is no randomness anywhere in the update.
RunResult run(const ApproxConfig& cfg, const DiscreteProfile* initial = nullptr);

// sup_i | sum_{j<=i} p_j - F(x_i) | with x_i = i/N.
double cdf_distance(const DiscreteProfile& p, const StrategyCdf& f);
double cdf_distance(const DiscreteProfile& p, const StrategyCdf& f,
                    const std::vector<double>& grid_x);

// The grid map i -> i/N used to compare discrete profiles with continuous
// strategies (the target uniform on {1..N} has continuous analogue i/N).
std::vector<double> default_grid(int grid_size);

}  // namespace guessing
