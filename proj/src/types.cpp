#include "guessing/types.hpp"

#include <algorithm>
#include <cmath>

namespace guessing {

std::string to_string(Rule rule) {
  return rule == Rule::PriceIsRight ? "pir" : "cw";
}

Rule rule_from_string(const std::string& s) {
  if (s == "pir" || s == "price-is-right") return Rule::PriceIsRight;
  if (s == "cw" || s == "closest-wins") return Rule::ClosestWins;
  throw std::domain_error("unknown rule '" + s + "' (expected pir or cw)");
}

TargetModel TargetModel::uniform_unit() {
  TargetModel t;
  t.uniform_ = true;
  return t;
}

TargetModel TargetModel::table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw std::domain_error("target table needs at least 2 knots");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first))
      throw std::domain_error("target table x values must be strictly increasing");
    if (!(knots[i].second > knots[i - 1].second))
      throw std::domain_error("target table CDF values must be strictly increasing");
  }
  if (knots.front().second != 0.0 || knots.back().second != 1.0)
    throw std::domain_error("target table CDF must run from 0 to 1");
  TargetModel t;
  t.uniform_ = false;
  t.knots_ = std::move(knots);
  return t;
}

double TargetModel::domain_lo() const { return uniform_ ? 0.0 : knots_.front().first; }

double TargetModel::domain_hi() const { return uniform_ ? 1.0 : knots_.back().first; }

double TargetModel::cdf(double x) const {
  if (uniform_) return std::clamp(x, 0.0, 1.0);
  if (x <= knots_.front().first) return 0.0;
  if (x >= knots_.back().first) return 1.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](double v, const auto& k) { return v < k.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  double t = (x - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

double TargetModel::inverse(double p) const {
  if (p < 0.0 || p > 1.0) throw std::domain_error("TargetModel::inverse: p outside [0,1]");
  if (uniform_) return p;
  if (p <= 0.0) return knots_.front().first;
  if (p >= 1.0) return knots_.back().first;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), p,
                             [](double v, const auto& k) { return v < k.second; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  double t = (p - lo.second) / (hi.second - lo.second);
  return lo.first + t * (hi.first - lo.first);
}

}  // namespace guessing
