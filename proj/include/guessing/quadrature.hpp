#pragma once

#include <algorithm>
#include <vector>

namespace guessing {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Computed once per order via Newton iteration on the Legendre recurrence;
// accurate to machine precision for the orders used here.
const GaussRule& gauss_legendre(int order = 64);

// Integral of f over a single panel [a, b].
template <typename Fn>
double integrate_panel(Fn&& f, double a, double b, int order = 64) {
  const GaussRule& rule = gauss_legendre(order);
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

// Integral over [a, b] split at the given interior points. Breakpoints
// outside (a, b) are ignored; integrands here are piecewise smooth with
// kinks at strategy support endpoints and at the deviation point, and
// splitting restores per-panel smoothness.
template <typename Fn>
double integrate_segments(Fn&& f, double a, double b, std::vector<double> breaks,
                          int order = 64) {
  if (!(b > a)) return 0.0;
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [&](double x) { return !(x > a && x < b); }),
               breaks.end());
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    total += integrate_panel(f, breaks[i], breaks[i + 1], order);
  return total;
}

}  // namespace guessing
