// Command-line frontend: solve for optimal guessing-game strategies, verify
// equilibrium conditions, run the discrete approximation, evaluate payoffs,
// and transform strategies to general target distributions.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "guessing/analytic.hpp"
#include "guessing/discrete.hpp"
#include "guessing/document.hpp"
#include "guessing/payoff.hpp"
#include "guessing/series.hpp"
#include "guessing/verify.hpp"

namespace {

using namespace guessing;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit_document(const StrategyDocument& doc, const std::string& out,
                   const std::string& format) {
  std::string text =
      format == "csv" ? document_to_csv(doc) : document_to_json(doc);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open for writing: " + out);
    file << text;
  }
}

std::vector<double> parse_guesses(const std::string& csv) {
  std::vector<double> guesses;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    try {
      guesses.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::domain_error("cannot parse guess '" + token + "'");
    }
  }
  return guesses;
}

int cmd_solve(const std::string& rule_name, int players, int order, double tol,
              const std::string& out, const std::string& format, int resolution) {
  Rule rule = rule_from_string(rule_name);
  std::optional<StrategyCdf> strategy;
  if (rule == Rule::PriceIsRight && players == 2)
    strategy = two_player_pir_cdf().strategy;
  else if (rule == Rule::PriceIsRight && players == 3)
    strategy = StrategyCdf::series(solve_pir3(order > 0 ? order : 72, tol));
  else if (rule == Rule::ClosestWins && players == 2)
    strategy = two_player_cw_strategy().strategy;
  else if (rule == Rule::ClosestWins && players == 3)
    strategy = three_player_cw_strategy().strategy;
  else if (rule == Rule::ClosestWins && players == 4)
    strategy = solve_cw4(order > 0 ? (order + 1) / 2 : 41, tol).strategy;

  if (!strategy) {
    std::cerr << "no closed-form solution for rule=" << rule_name
              << " players=" << players
              << "; use `approx` for a numerical profile on a finite grid\n";
    return kExitUsage;
  }
  emit_document(make_document(rule, players, *strategy, resolution), out, format);
  return kExitPass;
}

// Default verification tolerance by representation: closed forms are
// quadrature-limited, truncated series are not.
double default_tol(const StrategyCdf& f) {
  switch (f.kind()) {
    case StrategyCdf::Kind::Series:
      return 1e-3;
    case StrategyCdf::Kind::Discrete:
      return 1e-2;
    case StrategyCdf::Kind::Composed:
      return default_tol(f.base());
    default:
      return 1e-6;
  }
}

int cmd_verify(const std::string& path, double tol, bool tol_given, int grid,
               bool grid_given, const std::string& method, long long samples,
               std::uint64_t seed, const std::string& out) {
  StrategyDocument doc = read_document(path);
  // A composed document describes F(G(x)); its equilibrium content is the
  // base strategy in uniform coordinates, so verify that.
  StrategyCdf f = doc.strategy.kind() == StrategyCdf::Kind::Composed
                      ? doc.strategy.base()
                      : doc.strategy;
  GameSpec spec(doc.players, doc.rule);
  if (!tol_given) tol = default_tol(f);

  EquilibriumReport report;
  if (method == "mc") {
    int points = grid_given ? grid : 64;
    report = certify_monte_carlo(f, spec, tol, points, 16, samples, seed);
  } else {
    report = certify(f, spec, tol, grid_given ? grid : 512, 64);
  }

  std::string text = report_to_json(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open for writing: " + out);
    file << text;
  }
  std::cerr << (report.pass ? "PASS" : "FAIL")
            << ": max |v| on support = " << report.max_abs_on_support
            << ", max positive v off support = " << report.max_positive_off_support
            << ", tol = " << report.tol << "\n";
  return report.pass ? kExitPass : kExitFail;
}

int cmd_approx(const std::string& rule_name, int players, int grid_size, double epsilon,
               int iterations, int log_every, const std::string& out,
               const std::string& format, const std::string& trajectory) {
  ApproxConfig cfg;
  cfg.rule = rule_from_string(rule_name);
  cfg.players = players;
  cfg.grid_size = grid_size;
  cfg.epsilon = epsilon;
  cfg.iterations = iterations;
  cfg.log_every = log_every;
  cfg.validate();

  RunResult result = run(cfg);
  if (!trajectory.empty()) {
    std::ofstream traj(trajectory);
    if (!traj) throw std::runtime_error("cannot open for writing: " + trajectory);
    traj << "iter,i,p_i,v_i\n";
    char line[96];
    for (const auto& log : result.logs)
      for (std::size_t i = 0; i < log.p.size(); ++i) {
        std::snprintf(line, sizeof(line), "%d,%zu,%.17g,%.17g\n", log.iteration, i + 1,
                      log.p[i], log.v[i]);
        traj << line;
      }
  }
  std::cerr << "approx: " << result.iterations_completed
            << " iterations, final max_i v_i = " << result.final_max_v << "\n";
  StrategyCdf strategy = StrategyCdf::discrete(result.profile);
  emit_document(make_document(cfg.rule, players, strategy), out, format);
  return kExitPass;
}

int cmd_payoff(const std::string& rule_name, const std::string& guess_csv,
               std::optional<double> r) {
  Rule rule = rule_from_string(rule_name);
  std::vector<double> guesses = parse_guesses(guess_csv);
  if (guesses.size() < 2) throw std::domain_error("need at least two guesses");
  GameSpec spec(static_cast<int>(guesses.size()), rule);
  std::vector<double> payoffs =
      r ? realized_payoffs(spec, guesses, *r) : expected_payoffs(spec, guesses);

  std::printf("%-8s%-22s%s\n", "player", "guess", r ? "payoff" : "expected payoff");
  for (std::size_t i = 0; i < guesses.size(); ++i)
    std::printf("%-8zu%-22.17g%.17g\n", i + 1, guesses[i], payoffs[i]);
  return kExitPass;
}

int cmd_transform(const std::string& strategy_path, const std::string& table_path,
                  const std::string& out, const std::string& format, int resolution) {
  StrategyDocument doc = read_document(strategy_path);
  TargetModel target = read_target_table(table_path);
  StrategyCdf composed = compose_with_target(doc.strategy, target);
  emit_document(make_document(doc.rule, doc.players, composed, resolution), out, format);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and verifier for n-player guessing games over a uniform target"};
  app.require_subcommand(1);
  app.set_config("--config")->configurable(false);

  std::string rule = "pir", format = "json", out, method = "quadrature";
  std::string strategy_path, table_path, trajectory, guesses;
  int players = 2, order = 0, resolution = 512, grid = 512, grid_size = 50;
  int iterations = 5000, log_every = 100;
  double tol = 0.0, epsilon = 0.001, r_value = 0.0;
  long long samples = 100000;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Solve a game with a known analytic form");
  solve->add_option("--rule", rule, "pir or cw")->required();
  solve->add_option("--players", players, "number of players")->required();
  solve->add_option("--order", order, "series truncation order (0 = default)");
  solve->add_option("--tol", tol, "series boundary tolerance")->default_val(1e-9);
  solve->add_option("--out", out, "output path (default stdout)");
  solve->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--resolution", resolution, "sample table resolution")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Certify a strategy document");
  verify->add_option("strategy", strategy_path, "strategy document (JSON)")->required();
  auto* vtol = verify->add_option("--tol", tol, "pass tolerance");
  auto* vgrid = verify->add_option("--grid", grid, "support grid points")
                    ->check(CLI::PositiveNumber);
  verify->add_option("--method", method, "quadrature or mc")
      ->check(CLI::IsMember({"quadrature", "mc"}));
  verify->add_option("--samples", samples, "Monte Carlo samples per grid point")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Monte Carlo seed");
  verify->add_option("--out", out, "report path (default stdout)");

  auto* approx = app.add_subcommand("approx", "Iterative approximation on a finite grid");
  approx->add_option("--rule", rule, "pir or cw")->required();
  approx->add_option("--players", players, "number of players")->required();
  approx->add_option("--grid-size,-N", grid_size, "target grid size N")
      ->check(CLI::Range(2, 1 << 20));
  approx->add_option("--epsilon", epsilon, "step constant")
      ->check(CLI::PositiveNumber);
  approx->add_option("--iterations", iterations, "iteration count")
      ->check(CLI::PositiveNumber);
  approx->add_option("--log-every", log_every, "diagnostics cadence")
      ->check(CLI::PositiveNumber);
  approx->add_option("--out", out, "output path (default stdout)");
  approx->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  approx->add_option("--trajectory", trajectory, "per-iteration diagnostics CSV");

  auto* payoff = app.add_subcommand("payoff", "Realized or exact expected payoffs");
  payoff->add_option("--rule", rule, "pir or cw")->required();
  payoff->add_option("--guesses", guesses, "comma-separated guesses in [0,1]")
      ->required();
  auto* ropt = payoff->add_option("--r", r_value, "realized target value");

  auto* transform = app.add_subcommand("transform", "Compose with a target CDF table");
  transform->add_option("strategy", strategy_path, "strategy document (JSON)")
      ->required();
  transform->add_option("--target", table_path, "target CDF table (CSV or JSON)")
      ->required();
  transform->add_option("--out", out, "output path (default stdout)");
  transform->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  transform->add_option("--resolution", resolution, "sample table resolution")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed())
      return cmd_solve(rule, players, order, tol, out, format, resolution);
    if (verify->parsed())
      return cmd_verify(strategy_path, tol, vtol->count() > 0, grid, vgrid->count() > 0,
                        method, samples, seed, out);
    if (approx->parsed())
      return cmd_approx(rule, players, grid_size, epsilon, iterations, log_every, out,
                        format, trajectory);
    if (payoff->parsed())
      return cmd_payoff(rule, guesses,
                        ropt->count() > 0 ? std::optional<double>(r_value) : std::nullopt);
    if (transform->parsed())
      return cmd_transform(strategy_path, table_path, out, format, resolution);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
