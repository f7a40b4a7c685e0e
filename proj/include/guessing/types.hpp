#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace guessing {

// Winner selection rule.
//  PriceIsRight: the winning guess is the one closest to the target without
//                exceeding it; if every guess exceeds the target nobody wins.
//  ClosestWins:  the winning guess is the one at minimal absolute distance.
enum class Rule { PriceIsRight, ClosestWins };

std::string to_string(Rule rule);
Rule rule_from_string(const std::string& s);

// Distribution of the target value: either uniform on [0,1] or a tabulated
// CDF with linear interpolation between knots. Tabulated CDFs must be
// strictly increasing so that the inverse exists.
class TargetModel {
 public:
  static TargetModel uniform_unit();
  static TargetModel table(std::vector<std::pair<double, double>> knots);

  bool is_uniform_unit() const { return uniform_; }
  double domain_lo() const;
  double domain_hi() const;
  double cdf(double x) const;
  double inverse(double p) const;
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

 private:
  TargetModel() = default;
  bool uniform_ = true;
  std::vector<std::pair<double, double>> knots_;
};

struct GameSpec {
  int players = 2;
  Rule rule = Rule::PriceIsRight;
  TargetModel target = TargetModel::uniform_unit();

  GameSpec(int n, Rule r, TargetModel t = TargetModel::uniform_unit())
      : players(n), rule(r), target(std::move(t)) {
    if (players < 2) throw std::domain_error("GameSpec: need at least 2 players");
  }
};

// A pure-strategy profile: one guess per player.
using GuessProfile = std::vector<double>;

}  // namespace guessing
