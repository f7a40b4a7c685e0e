#include "guessing/verify.hpp"

#include <algorithm>
#include <cmath>

#include "guessing/payoff.hpp"
#include "guessing/quadrature.hpp"
#include "guessing/rng.hpp"

namespace guessing {

namespace {

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_uniform_target(const GameSpec& spec) {
  if (!spec.target.is_uniform_unit())
    throw std::domain_error(
        "verifier requires the uniform-unit target; verify general-target games in "
        "uniform coordinates");
}

// Against opponents all concentrated at one point the conditional payoff is
// piecewise constant in the target, which expected_payoffs already
// integrates exactly (including the tie at x == atom).
double value_against_point_mass(double atom, const GameSpec& spec, double x) {
  GuessProfile profile(spec.players, atom);
  profile[0] = x;
  return expected_payoffs(spec, profile)[0];
}

// v(x) for a continuous opponent CDF, reduced to one-dimensional integrals
// over the target.
//
// PriceIsRight: for r >= x the guess wins unless some opponent lands in
// (x, r], so the conditional payoff is n(1 - F(r) + F(x))^{n-1} - 1; for
// r < x the guess is dead and pays -1 whenever anyone is eligible.
//
// ClosestWins: the guess wins when no opponent falls strictly inside the
// interval between x and its mirror image 2r - x, giving conditional payoff
// n(1 - F(hi) + F(lo))^{n-1} - 1.
double value_against_continuous(const StrategyCdf& f, const GameSpec& spec, double x) {
  int n = spec.players;
  double lo_s = f.support_lo(), hi_s = f.support_hi();
  if (spec.rule == Rule::PriceIsRight) {
    double fx = f.evaluate(x);
    double dead = integrate_segments(
        [&](double r) { return ipow(1.0 - f.evaluate(r), n - 1) - 1.0; }, 0.0, x,
        {lo_s, hi_s});
    double live = integrate_segments(
        [&](double r) { return n * ipow(1.0 - f.evaluate(r) + fx, n - 1) - 1.0; }, x, 1.0,
        {lo_s, hi_s});
    return dead + live;
  }
  auto conditional = [&](double r) {
    double mirror = 2.0 * r - x;
    double lo = std::min(x, mirror), hi = std::max(x, mirror);
    return n * ipow(1.0 - f.evaluate(hi) + f.evaluate(lo), n - 1) - 1.0;
  };
  // Kinks where the mirror point crosses the support or [0,1], and at r = x.
  std::vector<double> breaks = {x, 0.5 * (x + lo_s), 0.5 * (x + hi_s), 0.5 * x,
                                0.5 * (x + 1.0)};
  return integrate_segments(conditional, 0.0, 1.0, std::move(breaks));
}

}  // namespace

double best_response_value(const StrategyCdf& f, const GameSpec& spec, double x) {
  require_uniform_target(spec);
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("best_response_value: deviation outside [0,1]");
  switch (f.kind()) {
    case StrategyCdf::Kind::PointMass:
      return value_against_point_mass(f.atom(), spec, x);
    case StrategyCdf::Kind::Discrete:
    case StrategyCdf::Kind::Composed:
      throw std::domain_error(
          "best_response_value: unsupported strategy representation");
    default:
      return value_against_continuous(f, spec, x);
  }
}

std::vector<double> best_response_curve(const StrategyCdf& f, const GameSpec& spec,
                                        const std::vector<double>& grid) {
  require_uniform_target(spec);
  std::vector<double> values(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < static_cast<long>(grid.size()); ++i)
    values[i] = best_response_value(f, spec, grid[i]);
  return values;
}

std::vector<double> best_response_curve_serial(const StrategyCdf& f, const GameSpec& spec,
                                               const std::vector<double>& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    values[i] = best_response_value(f, spec, grid[i]);
  return values;
}

double profile_value(const StrategyCdf& f, const GameSpec& spec) {
  require_uniform_target(spec);
  if (f.kind() == StrategyCdf::Kind::PointMass)
    return best_response_value(f, spec, f.atom());
  if (f.kind() == StrategyCdf::Kind::Discrete) {
    const auto& p = f.discrete_profile();
    ApproxConfig cfg;
    cfg.grid_size = p.size();
    cfg.players = spec.players;
    cfg.rule = spec.rule;
    auto v = best_response_values(p, cfg);
    double total = 0.0;
    for (int i = 0; i < p.size(); ++i) total += p.probs[i] * v[i];
    return total;
  }
  double lo = f.support_lo(), hi = f.support_hi();
  // 8 panels across the support; each v(x) is itself a quadrature.
  std::vector<double> breaks;
  for (int i = 1; i < 8; ++i) breaks.push_back(lo + (hi - lo) * i / 8.0);
  return integrate_segments(
      [&](double x) { return best_response_value(f, spec, x) * f.density(x); }, lo, hi,
      std::move(breaks));
}

namespace {

// Deviation grid: the support sampled densely plus off-support points on
// each side that lies inside [0,1].
void build_grid(const StrategyCdf& f, int grid_size, int off_points,
                std::vector<double>& grid, std::vector<bool>& on_support) {
  double lo = f.support_lo(), hi = f.support_hi();
  if (f.kind() == StrategyCdf::Kind::Discrete) {
    const auto& p = f.discrete_profile();
    grid = default_grid(p.size());
    on_support.resize(grid.size());
    for (int i = 0; i < p.size(); ++i) on_support[i] = p.probs[i] > 1e-9;
    return;
  }
  if (f.kind() == StrategyCdf::Kind::PointMass) {
    grid.push_back(f.atom());
    on_support.push_back(true);
  } else {
    for (int i = 0; i < grid_size; ++i) {
      grid.push_back(lo + (hi - lo) * i / (grid_size - 1.0));
      on_support.push_back(true);
    }
  }
  if (lo > 0.0) {
    for (int i = 0; i < off_points; ++i) {
      grid.push_back(lo * i / off_points);
      on_support.push_back(false);
    }
  }
  if (hi < 1.0) {
    for (int i = 1; i <= off_points; ++i) {
      grid.push_back(hi + (1.0 - hi) * i / off_points);
      on_support.push_back(false);
    }
  }
}

void finish_report(EquilibriumReport& report) {
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    if (report.on_support[i])
      report.max_abs_on_support =
          std::max(report.max_abs_on_support, std::abs(report.values[i]));
    else
      report.max_positive_off_support =
          std::max(report.max_positive_off_support, std::max(report.values[i], 0.0));
  }
  report.pass =
      report.max_abs_on_support <= report.tol &&
      report.max_positive_off_support <= report.tol;
}

}  // namespace

EquilibriumReport certify(const StrategyCdf& f, const GameSpec& spec, double tol,
                          int grid_size, int off_points) {
  require_uniform_target(spec);
  if (f.kind() == StrategyCdf::Kind::Discrete)
    return certify_discrete(f.discrete_profile(), spec.rule, spec.players, tol);

  EquilibriumReport report;
  report.rule = spec.rule;
  report.players = spec.players;
  report.method = VerifyMethod::Quadrature;
  report.tol = tol;
  build_grid(f, grid_size, off_points, report.grid, report.on_support);
  report.values = best_response_curve(f, spec, report.grid);
  report.game_value_per_player = profile_value(f, spec);
  finish_report(report);
  return report;
}

EquilibriumReport certify_monte_carlo(const StrategyCdf& f, const GameSpec& spec,
                                      double tol, int grid_size, int off_points,
                                      long long samples_per_point, std::uint64_t seed) {
  require_uniform_target(spec);
  EquilibriumReport report;
  report.rule = spec.rule;
  report.players = spec.players;
  report.method = VerifyMethod::MonteCarlo;
  report.tol = tol;
  report.mc_samples = samples_per_point;
  report.mc_seed = seed;
  build_grid(f, grid_size, off_points, report.grid, report.on_support);
  report.values.resize(report.grid.size());
  for (std::size_t i = 0; i < report.grid.size(); ++i)
    report.values[i] =
        monte_carlo_value(f, spec, report.grid[i], samples_per_point, seed + i).value;
  report.game_value_per_player =
      monte_carlo_value(f, spec, std::nullopt, samples_per_point,
                        seed + report.grid.size())
          .value;
  finish_report(report);
  return report;
}

EquilibriumReport certify_discrete(const DiscreteProfile& p, Rule rule, int players,
                                   double tol, double atom_tol) {
  p.validate();
  ApproxConfig cfg;
  cfg.grid_size = p.size();
  cfg.players = players;
  cfg.rule = rule;
  auto v = best_response_values(p, cfg);

  EquilibriumReport report;
  report.rule = rule;
  report.players = players;
  report.method = VerifyMethod::DiscreteExact;
  report.tol = tol;
  report.grid = default_grid(p.size());
  report.values = v;
  report.on_support.resize(p.size());
  for (int i = 0; i < p.size(); ++i) {
    bool on = p.probs[i] > atom_tol;
    report.on_support[i] = on;
    if (on)
      report.max_abs_on_support = std::max(report.max_abs_on_support, std::abs(v[i]));
    else
      report.max_positive_off_support =
          std::max(report.max_positive_off_support, std::max(v[i], 0.0));
  }
  for (int i = 0; i < p.size(); ++i)
    report.game_value_per_player += p.probs[i] * v[i];
  report.pass =
      report.max_abs_on_support <= tol && report.max_positive_off_support <= tol;
  return report;
}

McEstimate monte_carlo_value(const StrategyCdf& f, const GameSpec& spec,
                             std::optional<double> deviation, long long samples,
                             std::uint64_t seed) {
  require_uniform_target(spec);
  if (samples < 1) throw std::domain_error("monte_carlo_value: need samples >= 1");
  int n = spec.players;
  if (n + 1 > static_cast<int>(CounterRng::kDrawsPerSample))
    throw std::domain_error("monte_carlo_value: too many players for the draw stride");
  CounterRng rng(seed);

  constexpr long long kBlock = 1 << 16;
  long long blocks = (samples + kBlock - 1) / kBlock;
  std::vector<double> block_sum(blocks, 0.0), block_sumsq(blocks, 0.0);

#pragma omp parallel for schedule(static)
  for (long long b = 0; b < blocks; ++b) {
    double guesses[16];
    double sum = 0.0, sumsq = 0.0;
    long long begin = b * kBlock, end = std::min(samples, begin + kBlock);
    for (long long j = begin; j < end; ++j) {
      double r = rng.uniform(j, 0);
      if (deviation)
        guesses[0] = *deviation;
      else
        guesses[0] = f.quantile(rng.uniform(j, n));
      for (int k = 1; k < n; ++k) guesses[k] = f.quantile(rng.uniform(j, k));
      double payoff = realized_payoff_first(spec.rule, {guesses, guesses + n}, r);
      sum += payoff;
      sumsq += payoff * payoff;
    }
    block_sum[b] = sum;
    block_sumsq[b] = sumsq;
  }

  double sum = 0.0, sumsq = 0.0;
  for (long long b = 0; b < blocks; ++b) {
    sum += block_sum[b];
    sumsq += block_sumsq[b];
  }
  double mean = sum / samples;
  McEstimate est;
  est.value = mean;
  est.samples = samples;
  est.seed = seed;
  if (samples > 1) {
    double var = (sumsq - samples * mean * mean) / (samples - 1.0);
    est.std_error = std::sqrt(std::max(var, 0.0) / samples);
  }
  return est;
}

}  // namespace guessing
