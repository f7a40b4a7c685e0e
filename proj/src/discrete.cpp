#include "guessing/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace guessing {

namespace {

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Expected payoff to a player guessing level i (1-based) for target r, with
// n-1 opponents i.i.d. from p. Needs only two aggregates of the opponent
// distribution: the probability `closer` of an opponent strictly beating the
// guess and the probability `tie` of an opponent matching it exactly.
//
// With no closer opponent and k ties the guesser nets n/(k+1) - 1; summing
// the binomial over k collapses to (w^n - s^n)/(w - s) with w = 1 - closer
// and s = w - tie, expanded here as a geometric sum to avoid cancellation.
double payoff_given_target(int n, double closer, double tie) {
  double w = 1.0 - closer;
  double s = std::max(w - tie, 0.0);
  double sum = 0.0, wj = 1.0;
  for (int j = n - 1; j >= 0; --j) {
    sum += wj * ipow(s, j);
    wj *= w;
  }
  return sum - 1.0;
}

std::vector<double> prefix_sums(const std::vector<double>& p) {
  std::vector<double> c(p.size() + 1, 0.0);
  std::partial_sum(p.begin(), p.end(), c.begin() + 1);
  return c;
}

// v_i for one grid level; cum[j] = P(opponent guess <= j), cum[0] = 0.
double best_response_at(Rule rule, int n, int N, int i, const std::vector<double>& p,
                        const std::vector<double>& cum) {
  double total = 0.0;
  if (rule == Rule::PriceIsRight) {
    for (int r = 1; r < i; ++r) {
      // Guess above the target: -1 whenever any opponent is eligible.
      double none_eligible = ipow(1.0 - cum[r], n - 1);
      total += none_eligible - 1.0;
    }
    for (int r = i; r <= N; ++r) {
      double closer = cum[r] - cum[i];  // opponents in (i, r] beat the guess
      total += payoff_given_target(n, closer, p[i - 1]);
    }
  } else {
    for (int r = 1; r <= N; ++r) {
      int d = std::abs(i - r);
      // Strictly closer: within distance d-1 of r. Ties: exactly at distance d.
      double closer, tie;
      if (d == 0) {
        closer = 0.0;
        tie = p[i - 1];
      } else {
        int lo = std::max(1, r - d + 1), hi = std::min(N, r + d - 1);
        closer = (lo <= hi) ? cum[hi] - cum[lo - 1] : 0.0;
        tie = 0.0;
        int left = r - d, right = r + d;
        if (left >= 1) tie += p[left - 1];
        if (right <= N && right != left) tie += p[right - 1];
      }
      total += payoff_given_target(n, closer, tie);
    }
  }
  return total / N;
}

std::vector<double> best_response_values_impl(const DiscreteProfile& p,
                                              const ApproxConfig& cfg, bool parallel) {
  cfg.validate();
  if (p.size() != cfg.grid_size)
    throw std::invalid_argument("best_response_values: profile size does not match N");
  int N = cfg.grid_size, n = cfg.players;
  auto cum = prefix_sums(p.probs);
  std::vector<double> v(N);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 1; i <= N; ++i)
      v[i - 1] = best_response_at(cfg.rule, n, N, i, p.probs, cum);
  } else {
    for (int i = 1; i <= N; ++i)
      v[i - 1] = best_response_at(cfg.rule, n, N, i, p.probs, cum);
  }
  return v;
}

}  // namespace

void ApproxConfig::validate() const {
  if (grid_size < 2) throw std::domain_error("ApproxConfig: grid size must be >= 2");
  if (!(epsilon > 0.0)) throw std::domain_error("ApproxConfig: epsilon must be positive");
  if (iterations < 1) throw std::domain_error("ApproxConfig: iterations must be >= 1");
  if (players < 2) throw std::domain_error("ApproxConfig: players must be >= 2");
}

double discrete_expected_payoff(Rule rule, int players, int grid_size,
                                const std::vector<int>& guesses) {
  if (static_cast<int>(guesses.size()) != players)
    throw std::invalid_argument("discrete_expected_payoff: wrong number of guesses");
  for (int g : guesses)
    if (g < 1 || g > grid_size)
      throw std::domain_error("discrete_expected_payoff: guess outside 1..N");

  double total = 0.0;
  for (int r = 1; r <= grid_size; ++r) {
    if (rule == Rule::PriceIsRight) {
      int best = 0, winners = 0;
      for (int g : guesses) {
        if (g > r) continue;
        if (g > best) {
          best = g;
          winners = 1;
        } else if (g == best) {
          ++winners;
        }
      }
      if (winners == 0) continue;  // everyone above the target: all payoffs 0
      if (guesses[0] == best)
        total += static_cast<double>(players) / winners - 1.0;
      else
        total += -1.0;
    } else {
      int best = std::abs(guesses[0] - r), winners = 0;
      for (int g : guesses) best = std::min(best, std::abs(g - r));
      for (int g : guesses)
        if (std::abs(g - r) == best) ++winners;
      if (std::abs(guesses[0] - r) == best)
        total += static_cast<double>(players) / winners - 1.0;
      else
        total += -1.0;
    }
  }
  return total / grid_size;
}

std::vector<double> best_response_values(const DiscreteProfile& p, const ApproxConfig& cfg) {
  return best_response_values_impl(p, cfg, /*parallel=*/true);
}

std::vector<double> best_response_values_serial(const DiscreteProfile& p,
                                                const ApproxConfig& cfg) {
  return best_response_values_impl(p, cfg, /*parallel=*/false);
}

DiscreteProfile step(const DiscreteProfile& p, const ApproxConfig& cfg) {
  auto v = best_response_values(p, cfg);
  DiscreteProfile next = p;
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    next.probs[i] = p.probs[i] + cfg.epsilon * std::max(0.0, v[i]);
    sum += next.probs[i];
  }
  for (double& q : next.probs) q /= sum;
  return next;
}

RunResult run(const ApproxConfig& cfg, const DiscreteProfile* initial) {
  cfg.validate();
  int N = cfg.grid_size;
  DiscreteProfile p;
  if (initial) {
    initial->validate();
    if (initial->size() != N)
      throw std::invalid_argument("run: initial profile size does not match N");
    p = *initial;
  } else {
    p.probs.assign(N, 1.0 / N);
  }

  RunResult result;
  int iter = 0;
  for (; iter < cfg.iterations; ++iter) {
    auto v = best_response_values(p, cfg);
    double max_v = *std::max_element(v.begin(), v.end());
    if (cfg.log_every > 0 && iter % cfg.log_every == 0)
      result.logs.push_back({iter, max_v, p.probs, v});
    if (cfg.early_stop_tol >= 0.0 && max_v < cfg.early_stop_tol) break;
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
      p.probs[i] += cfg.epsilon * std::max(0.0, v[i]);
      sum += p.probs[i];
    }
    for (double& q : p.probs) q /= sum;
  }

  auto v = best_response_values(p, cfg);
  double max_v = *std::max_element(v.begin(), v.end());
  if (result.logs.empty() || result.logs.back().iteration != iter)
    result.logs.push_back({iter, max_v, p.probs, v});
  result.profile = std::move(p);
  result.iterations_completed = iter;
  result.final_max_v = max_v;
  return result;
}

std::vector<double> default_grid(int grid_size) {
  std::vector<double> x(grid_size);
  for (int i = 1; i <= grid_size; ++i) x[i - 1] = static_cast<double>(i) / grid_size;
  return x;
}

double cdf_distance(const DiscreteProfile& p, const StrategyCdf& f,
                    const std::vector<double>& grid_x) {
  if (grid_x.size() != p.probs.size())
    throw std::invalid_argument("cdf_distance: grid size mismatch");
  double cum = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < grid_x.size(); ++i) {
    cum += p.probs[i];
    worst = std::max(worst, std::abs(cum - f.evaluate(grid_x[i])));
  }
  return worst;
}

double cdf_distance(const DiscreteProfile& p, const StrategyCdf& f) {
  return cdf_distance(p, f, default_grid(p.size()));
}

}  // namespace guessing
