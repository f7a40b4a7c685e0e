#include "guessing/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace guessing {

namespace {

// Truncated polynomial helpers; index = power, everything cut at length L.

std::vector<double> trunc(const std::vector<double>& a, int len) {
  std::vector<double> r(len, 0.0);
  for (int i = 0; i < len && i < static_cast<int>(a.size()); ++i) r[i] = a[i];
  return r;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b,
                        int len) {
  std::vector<double> r(len, 0.0);
  int na = std::min<int>(a.size(), len), nb = std::min<int>(b.size(), len);
  for (int i = 0; i < na; ++i) {
    if (a[i] == 0.0) continue;
    int jmax = std::min(nb, len - i);
    for (int j = 0; j < jmax; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// k-th derivative of the series c, truncated to length len.
std::vector<double> deriv(const std::vector<double>& c, int times, int len) {
  std::vector<double> r(len, 0.0);
  for (int k = 0; k < len; ++k) {
    int src = k + times;
    if (src >= static_cast<int>(c.size())) break;
    double fac = 1.0;
    for (int j = 0; j < times; ++j) fac *= static_cast<double>(src - j);
    r[k] = fac * c[src];
  }
  return r;
}

// Coefficient m of the three-player Price-Is-Right ODE numerator.
double pir3_residual_coeff(const std::vector<double>& c, int m) {
  int len = m + 1;
  auto f = trunc(c, len);
  auto d1 = deriv(c, 1, len);
  auto d2 = deriv(c, 2, len);
  auto d1_2 = mul(d1, d1, len);
  auto d1_3 = mul(d1_2, d1, len);
  auto f_d1_2 = mul(f, d1_2, len);
  auto f_d2 = mul(f, d2, len);
  auto f2 = mul(f, f, len);
  auto f2_d2 = mul(f2, d2, len);
  double x_d1_3 = (m >= 1) ? d1_3[m - 1] : 0.0;  // coefficient of x * F'^3
  return 8.0 * d1_2[m] - 2.0 * f_d1_2[m] - 6.0 * d1_3[m] + 6.0 * x_d1_3 - 2.0 * d2[m] -
         2.0 * f_d2[m] + f2_d2[m];
}

// Coefficient p of the folded four-player Closest-Wins ODE numerator.
double cw4_residual_coeff(const std::vector<double>& c, int p) {
  int len = p + 1;
  auto f = trunc(c, len);
  auto d1 = deriv(c, 1, len);
  auto d2 = deriv(c, 2, len);
  auto d3 = deriv(c, 3, len);
  auto d1_2 = mul(d1, d1, len);
  auto d1_4 = mul(d1_2, d1_2, len);
  auto d1_5 = mul(d1_4, d1, len);
  auto f2 = mul(f, f, len);
  auto f3 = mul(f2, f, len);
  auto d2_2 = mul(d2, d2, len);
  double t1 = -18.0 * mul(f, d1_4, len)[p];
  double t2 = (p >= 1) ? -12.0 * d1_5[p - 1] : 0.0;  // coefficient of x * f'^5
  double t3 = 21.0 * mul(d1_2, d2, len)[p];
  double t4 = 9.0 * mul(mul(f2, d1_2, len), d2, len)[p];
  double t5 = -9.0 * mul(f, d2_2, len)[p];
  double t6 = -3.0 * mul(f3, d2_2, len)[p];
  double t7 = 3.0 * mul(mul(f, d1, len), d3, len)[p];
  double t8 = mul(mul(f3, d1, len), d3, len)[p];
  return t1 + t2 + t3 + t4 + t5 + t6 + t7 + t8;
}

// Fill c[m+2] for m = 0..K-2 so that every residual coefficient up to K-2
// vanishes. The unknown enters each order linearly through F''; the slope is
// measured numerically rather than hand-derived.
void run_pir3_recurrence(std::vector<double>& c) {
  int order = static_cast<int>(c.size()) - 1;
  for (int m = 0; m + 2 <= order; ++m) {
    c[m + 2] = 0.0;
    double r0 = pir3_residual_coeff(c, m);
    c[m + 2] = 1.0;
    double r1 = pir3_residual_coeff(c, m);
    double slope = r1 - r0;
    if (slope == 0.0) throw std::runtime_error("pir3 recurrence: degenerate order");
    c[m + 2] = -r0 / slope;
  }
}

double eval_poly(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

}  // namespace

double pir3_ode_residual(const SeriesSolution& f, double x) {
  if (f.coefficients.empty()) throw std::domain_error("pir3_ode_residual: empty series");
  double F = f.value(x);
  double d1 = f.derivative(x);
  double d2 = f.second_derivative(x);
  return 8.0 * d1 * d1 - 2.0 * F * d1 * d1 - 6.0 * d1 * d1 * d1 +
         6.0 * x * d1 * d1 * d1 - 2.0 * d2 - 2.0 * F * d2 + F * F * d2;
}

SeriesSolution solve_pir3(int order, double tol) {
  if (order < 5) throw std::domain_error("solve_pir3: order must be at least 5");
  if (!(tol > 0.0)) throw std::domain_error("solve_pir3: tol must be positive");
  const double u = 7.0 / 9.0;

  auto boundary_mismatch = [&](double c1) {
    std::vector<double> c(order + 1, 0.0);
    c[1] = c1;
    run_pir3_recurrence(c);
    return eval_poly(c, u) - 1.0;
  };

  // Shooting bracket for the leading coefficient; the mismatch must change
  // sign across it and is checked for monotonicity instead of assuming it.
  double lo = 0.5, hi = 1.0;
  double m_prev = boundary_mismatch(lo);
  double m_lo = m_prev, m_hi = 0.0;
  bool monotone = true;
  for (int i = 1; i <= 4; ++i) {
    double m_i = boundary_mismatch(lo + (hi - lo) * i / 4.0);
    if (m_i <= m_prev) monotone = false;
    m_prev = m_i;
    if (i == 4) m_hi = m_i;
  }
  if (!(m_lo < 0.0 && m_hi > 0.0) || !monotone) {
    std::ostringstream msg;
    msg << "solve_pir3: shooting bracket invalid: mismatch(" << lo << ") = " << m_lo
        << ", mismatch(" << hi << ") = " << m_hi << (monotone ? "" : ", not monotone");
    throw std::runtime_error(msg.str());
  }

  for (int iter = 0; iter < 80 && hi - lo > 1e-13; ++iter) {
    double mid = 0.5 * (lo + hi);
    (boundary_mismatch(mid) < 0.0 ? lo : hi) = mid;
  }

  SeriesSolution s;
  s.coefficients.assign(order + 1, 0.0);
  s.coefficients[1] = 0.5 * (lo + hi);
  run_pir3_recurrence(s.coefficients);
  s.support_upper = u;
  s.truncation_order = order;
  s.rule = Rule::PriceIsRight;
  s.players = 3;

  double mismatch = s.value(u) - 1.0;
  if (std::abs(mismatch) > tol) {
    std::ostringstream msg;
    msg << "solve_pir3: boundary mismatch " << mismatch << " exceeds tol " << tol;
    throw std::runtime_error(msg.str());
  }
  return s;
}

double cw4_symmetrized_payoff(double x, double y, double z, double w) {
  double s1 = y, s2 = z, s3 = w;
  if (s1 > s2) std::swap(s1, s2);
  if (s2 > s3) std::swap(s2, s3);
  if (s1 > s2) std::swap(s1, s2);
  if (x < s1) return (-8.0 + 16.0 * s1 + 8.0 * s2 + 4.0 * s3) / 16.0;
  if (x < s2) return (-8.0 - 4.0 * x + 8.0 * s2 + 4.0 * s3) / 16.0;
  if (x < s3) return (-8.0 * x - 8.0 * s2 + 8.0 * s3) / 16.0;
  return (-8.0 + 16.0 * x - 4.0 * s2 - 8.0 * s3) / 16.0;
}

double cw4_ode_residual(const SeriesSolution& fhat, double x) {
  if (fhat.coefficients.empty()) throw std::domain_error("cw4_ode_residual: empty series");
  double f = fhat.value(x);
  double d1 = fhat.derivative(x);
  double d2 = fhat.second_derivative(x);
  double d3 = fhat.third_derivative(x);
  double d1_2 = d1 * d1;
  double d1_4 = d1_2 * d1_2;
  return -18.0 * f * d1_4 - 12.0 * x * d1_4 * d1 + 21.0 * d1_2 * d2 +
         9.0 * f * f * d1_2 * d2 - 9.0 * f * d2 * d2 - 3.0 * f * f * f * d2 * d2 +
         3.0 * f * d1 * d3 + f * f * f * d1 * d3;
}

Cw4Solution solve_cw4(int odd_terms, double tol) {
  if (odd_terms < 5) throw std::domain_error("solve_cw4: need at least 5 odd terms");
  if (!(tol > 0.0)) throw std::domain_error("solve_cw4: tol must be positive");
  int order = 2 * odd_terms - 1;

  // Unit-slope odd series; all further odd coefficients follow recursively.
  std::vector<double> phi(order + 1, 0.0);
  phi[1] = 1.0;
  for (int p = 1; p + 2 <= order; p += 2) {
    phi[p + 2] = 0.0;
    double r0 = cw4_residual_coeff(phi, p);
    phi[p + 2] = 1.0;
    double r1 = cw4_residual_coeff(phi, p);
    double slope = r1 - r0;
    if (slope == 0.0) throw std::runtime_error("solve_cw4: degenerate order");
    phi[p + 2] = -r0 / slope;
  }

  // All coefficients are positive, so phi crosses 1 exactly once in (0, 1).
  double t_lo = 0.0, t_hi = 1.0;
  if (!(eval_poly(phi, 1.0) > 1.0))
    throw std::runtime_error("solve_cw4: unit-slope series does not reach 1 on [0,1]");
  for (int iter = 0; iter < 100 && t_hi - t_lo > 1e-15; ++iter) {
    double mid = 0.5 * (t_lo + t_hi);
    (eval_poly(phi, mid) < 1.0 ? t_lo : t_hi) = mid;
  }
  double t_star = 0.5 * (t_lo + t_hi);

  // Scale from the support-endpoint condition. With f(y) = phi(a y) and
  // u = t*/a it reduces to a = t* + (3/2) Int_0^{t*} s phi(s) phi'(s) ds,
  // evaluated by exact polynomial integration.
  auto dphi = deriv(phi, 1, order + 1);
  auto integrand = mul(phi, dphi, order + 1);  // phi * phi'; extra factor s below
  double integral = 0.0;
  double tpow = t_star * t_star;  // s^{k+1} integrates to t*^{k+2} / (k+2)
  for (std::size_t k = 0; k < integrand.size(); ++k) {
    integral += integrand[k] * tpow / (k + 2.0);
    tpow *= t_star;
  }
  double a = t_star + 1.5 * integral;
  double u = t_star / a;

  // fhat(x) = phi(a x): coefficient k is phi_k * a^k.
  SeriesSolution fhat;
  fhat.coefficients.assign(order + 1, 0.0);
  double ak = 1.0;
  for (int k = 0; k <= order; ++k) {
    fhat.coefficients[k] = phi[k] * ak;
    ak *= a;
  }
  fhat.support_upper = u;
  fhat.truncation_order = order;
  fhat.rule = Rule::ClosestWins;
  fhat.players = 4;

  if (std::abs(fhat.value(u) - 1.0) > tol)
    throw std::runtime_error("solve_cw4: folded CDF misses 1 at its support end");

  Cw4Constants constants;
  constants.a = a;
  constants.t_star = t_star;
  constants.u = u;
  constants.folded_lo = (1.0 - u) / 2.0;
  constants.folded_hi = (1.0 + u) / 2.0;

  StrategyCdf strategy = unfold_symmetric(fhat, u);
  return {std::move(fhat), constants, std::move(strategy)};
}

StrategyCdf unfold_symmetric(const SeriesSolution& fhat, double u) {
  double scale = 0.0;
  for (double c : fhat.coefficients) scale = std::max(scale, std::abs(c));
  for (std::size_t k = 0; k < fhat.coefficients.size(); k += 2)
    if (std::abs(fhat.coefficients[k]) > 1e-10 * scale)
      throw std::domain_error("unfold_symmetric: series is not odd");
  SeriesSolution s = fhat;
  s.support_upper = u;
  return StrategyCdf::folded_series(std::move(s));
}

}  // namespace guessing
