#include "guessing/payoff.hpp"

#include <algorithm>
#include <cmath>

namespace guessing {

namespace {

void check_profile(const GameSpec& spec, const GuessProfile& guesses) {
  if (static_cast<int>(guesses.size()) != spec.players)
    throw std::invalid_argument("guess profile length does not match player count");
  double lo = spec.target.domain_lo(), hi = spec.target.domain_hi();
  for (double g : guesses)
    if (!(g >= lo && g <= hi))
      throw std::domain_error("guess outside the target range");
}

}  // namespace

void realized_payoffs_into(Rule rule, std::span<const double> guesses, double r,
                           std::span<double> out) {
  std::size_t n = guesses.size();
  if (rule == Rule::PriceIsRight) {
    double best = -1.0;
    std::size_t winners = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (guesses[i] > r) continue;
      if (guesses[i] > best) {
        best = guesses[i];
        winners = 1;
      } else if (guesses[i] == best) {
        ++winners;
      }
    }
    if (winners == 0) {
      std::fill(out.begin(), out.end(), 0.0);
      return;
    }
    double win = static_cast<double>(n) / winners - 1.0;
    for (std::size_t i = 0; i < n; ++i)
      out[i] = (guesses[i] <= r && guesses[i] == best) ? win : -1.0;
  } else {
    double best = std::abs(guesses[0] - r);
    std::size_t winners = 1;
    for (std::size_t i = 1; i < n; ++i) {
      double d = std::abs(guesses[i] - r);
      if (d < best) {
        best = d;
        winners = 1;
      } else if (d == best) {
        ++winners;
      }
    }
    double win = static_cast<double>(n) / winners - 1.0;
    for (std::size_t i = 0; i < n; ++i)
      out[i] = (std::abs(guesses[i] - r) == best) ? win : -1.0;
  }
}

double realized_payoff_first(Rule rule, std::span<const double> guesses, double r) {
  std::size_t n = guesses.size();
  if (rule == Rule::PriceIsRight) {
    double best = -1.0;
    std::size_t winners = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (guesses[i] > r) continue;
      if (guesses[i] > best) {
        best = guesses[i];
        winners = 1;
      } else if (guesses[i] == best) {
        ++winners;
      }
    }
    if (winners == 0) return 0.0;
    if (guesses[0] <= r && guesses[0] == best)
      return static_cast<double>(n) / winners - 1.0;
    return -1.0;
  }
  double d0 = std::abs(guesses[0] - r);
  double best = d0;
  std::size_t winners = 1;
  for (std::size_t i = 1; i < n; ++i) {
    double d = std::abs(guesses[i] - r);
    if (d < best) {
      best = d;
      winners = 1;
    } else if (d == best) {
      ++winners;
    }
  }
  return d0 == best ? static_cast<double>(n) / winners - 1.0 : -1.0;
}

std::vector<double> realized_payoffs(const GameSpec& spec, const GuessProfile& guesses,
                                     double r) {
  check_profile(spec, guesses);
  if (!(r >= spec.target.domain_lo() && r <= spec.target.domain_hi()))
    throw std::domain_error("target value outside the target range");
  std::vector<double> out(guesses.size());
  realized_payoffs_into(spec.rule, guesses, r, out);
  return out;
}

std::vector<double> expected_payoffs(const GameSpec& spec, const GuessProfile& guesses) {
  if (!spec.target.is_uniform_unit())
    throw std::domain_error(
        "expected_payoffs requires the uniform-unit target; compose guesses through G "
        "for general targets");
  check_profile(spec, guesses);
  std::size_t n = guesses.size();

  // Distinct guess levels with multiplicities.
  std::vector<double> levels(guesses.begin(), guesses.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t m = levels.size();
  std::vector<int> mult(m, 0);
  for (double g : guesses)
    mult[std::lower_bound(levels.begin(), levels.end(), g) - levels.begin()] += 1;

  // Length of the target interval each level wins.
  std::vector<double> win_len(m);
  double no_win = 0.0;  // measure of targets nobody wins (PriceIsRight only)
  if (spec.rule == Rule::PriceIsRight) {
    no_win = levels.front();
    for (std::size_t j = 0; j < m; ++j) {
      double next = (j + 1 < m) ? levels[j + 1] : 1.0;
      win_len[j] = next - levels[j];
    }
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      double lo = (j == 0) ? 0.0 : 0.5 * (levels[j - 1] + levels[j]);
      double hi = (j + 1 < m) ? 0.5 * (levels[j] + levels[j + 1]) : 1.0;
      win_len[j] = hi - lo;
    }
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j =
        std::lower_bound(levels.begin(), levels.end(), guesses[i]) - levels.begin();
    double win = static_cast<double>(n) / mult[j] - 1.0;
    double lose_len = 1.0 - no_win - win_len[j];
    out[i] = win * win_len[j] - lose_len;
  }
  return out;
}

}  // namespace guessing
