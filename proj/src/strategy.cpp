#include "guessing/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace guessing {

double SeriesSolution::value(double t) const {
  double v = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 0;) v = v * t + coefficients[k];
  return v;
}

double SeriesSolution::derivative(double t) const {
  double v = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 1;)
    v = v * t + static_cast<double>(k) * coefficients[k];
  return v;
}

double SeriesSolution::second_derivative(double t) const {
  double v = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 2;)
    v = v * t + static_cast<double>(k) * static_cast<double>(k - 1) * coefficients[k];
  return v;
}

double SeriesSolution::third_derivative(double t) const {
  double v = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 3;)
    v = v * t + static_cast<double>(k) * static_cast<double>(k - 1) *
                    static_cast<double>(k - 2) * coefficients[k];
  return v;
}

void DiscreteProfile::validate() const {
  if (probs.empty()) throw std::domain_error("DiscreteProfile: empty");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::domain_error("DiscreteProfile: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::domain_error("DiscreteProfile: entries do not sum to 1");
}

StrategyCdf StrategyCdf::pir2_closed_form() { return StrategyCdf(Rep{ClosedFormRep{}}); }

StrategyCdf StrategyCdf::uniform(double lo, double hi) {
  if (!(hi > lo)) throw std::domain_error("uniform strategy: need hi > lo");
  return StrategyCdf(Rep{UniformRep{lo, hi}});
}

StrategyCdf StrategyCdf::point_mass(double x) { return StrategyCdf(Rep{PointMassRep{x}}); }

StrategyCdf StrategyCdf::series(SeriesSolution s) {
  if (s.coefficients.empty()) throw std::domain_error("series strategy: empty series");
  SeriesRep rep{std::move(s), /*folded=*/false, 0.0, 0.0, {}, {}};
  rep.lo = 0.0;
  rep.hi = rep.s.support_upper;
  const int kTable = 2048;
  rep.grid_x.reserve(kTable + 1);
  rep.grid_p.reserve(kTable + 1);
  for (int i = 0; i <= kTable; ++i) {
    double x = rep.lo + (rep.hi - rep.lo) * i / kTable;
    rep.grid_x.push_back(x);
    rep.grid_p.push_back(std::clamp(rep.s.value(x), 0.0, 1.0));
  }
  return StrategyCdf(Rep{std::move(rep)});
}

StrategyCdf StrategyCdf::folded_series(SeriesSolution odd_series) {
  if (odd_series.coefficients.empty())
    throw std::domain_error("folded series strategy: empty series");
  double u = odd_series.support_upper;
  SeriesRep rep{std::move(odd_series), /*folded=*/true, (1.0 - u) / 2.0, (1.0 + u) / 2.0,
                {}, {}};
  const int kTable = 2048;
  rep.grid_x.reserve(kTable + 1);
  rep.grid_p.reserve(kTable + 1);
  for (int i = 0; i <= kTable; ++i) {
    double x = rep.lo + (rep.hi - rep.lo) * i / kTable;
    rep.grid_x.push_back(x);
    rep.grid_p.push_back(std::clamp(0.5 + 0.5 * rep.s.value(2.0 * x - 1.0), 0.0, 1.0));
  }
  return StrategyCdf(Rep{std::move(rep)});
}

StrategyCdf StrategyCdf::discrete(DiscreteProfile p) {
  p.validate();
  DiscreteRep rep{std::move(p), {}, 0.0, 0.0};
  int n = rep.p.size();
  rep.cum.resize(n);
  std::partial_sum(rep.p.probs.begin(), rep.p.probs.end(), rep.cum.begin());
  int first = 0;
  while (first < n - 1 && rep.p.probs[first] <= 0.0) ++first;
  int last = n - 1;
  while (last > 0 && rep.p.probs[last] <= 0.0) --last;
  rep.lo = static_cast<double>(first + 1) / n;
  rep.hi = static_cast<double>(last + 1) / n;
  return StrategyCdf(Rep{std::move(rep)});
}

StrategyCdf StrategyCdf::composed(StrategyCdf base, TargetModel g) {
  if (base.kind() == Kind::Composed)
    throw std::domain_error("composed strategy: base is already composed");
  ComposedRep rep{std::make_shared<const StrategyCdf>(std::move(base)), std::move(g), 0.0,
                  0.0};
  rep.lo = rep.g.inverse(rep.base->support_lo());
  rep.hi = rep.g.inverse(rep.base->support_hi());
  return StrategyCdf(Rep{std::move(rep)});
}

StrategyCdf::Kind StrategyCdf::kind() const {
  return std::visit(
      [](const auto& r) -> Kind {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClosedFormRep>) return Kind::ClosedFormPir2;
        if constexpr (std::is_same_v<T, UniformRep>) return Kind::Uniform;
        if constexpr (std::is_same_v<T, PointMassRep>) return Kind::PointMass;
        if constexpr (std::is_same_v<T, SeriesRep>) return Kind::Series;
        if constexpr (std::is_same_v<T, DiscreteRep>) return Kind::Discrete;
        if constexpr (std::is_same_v<T, ComposedRep>) return Kind::Composed;
      },
      rep_);
}

double StrategyCdf::support_lo() const {
  return std::visit(
      [](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClosedFormRep>) return 0.0;
        else if constexpr (std::is_same_v<T, UniformRep>) return r.lo;
        else if constexpr (std::is_same_v<T, PointMassRep>) return r.x;
        else return r.lo;
      },
      rep_);
}

double StrategyCdf::support_hi() const {
  return std::visit(
      [](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClosedFormRep>) return 0.75;
        else if constexpr (std::is_same_v<T, UniformRep>) return r.hi;
        else if constexpr (std::is_same_v<T, PointMassRep>) return r.x;
        else return r.hi;
      },
      rep_);
}

double StrategyCdf::series_eval(const SeriesRep& r, double x) const {
  if (x < r.lo) return 0.0;
  if (x > r.hi) return 1.0;
  double v = r.folded ? 0.5 + 0.5 * r.s.value(2.0 * x - 1.0) : r.s.value(x);
  return std::clamp(v, 0.0, 1.0);
}

double StrategyCdf::evaluate(double x) const {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClosedFormRep>) {
          if (x <= 0.0) return 0.0;
          if (x >= 0.75) return 1.0;
          return 1.0 / std::sqrt(1.0 - x) - 1.0;
        } else if constexpr (std::is_same_v<T, UniformRep>) {
          return std::clamp((x - r.lo) / (r.hi - r.lo), 0.0, 1.0);
        } else if constexpr (std::is_same_v<T, PointMassRep>) {
          return x >= r.x ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, SeriesRep>) {
          return series_eval(r, x);
        } else if constexpr (std::is_same_v<T, DiscreteRep>) {
          int n = r.p.size();
          // atoms at i/N for i = 1..N
          int idx = static_cast<int>(std::floor(x * n + 1e-12));
          if (idx < 1) return 0.0;
          if (idx > n) idx = n;
          return r.cum[idx - 1];
        } else {
          return r.base->evaluate(r.g.cdf(x));
        }
      },
      rep_);
}

double StrategyCdf::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("quantile: p outside [0,1]");
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClosedFormRep>) {
          double t = 1.0 + p;
          return 1.0 - 1.0 / (t * t);
        } else if constexpr (std::is_same_v<T, UniformRep>) {
          return r.lo + p * (r.hi - r.lo);
        } else if constexpr (std::is_same_v<T, PointMassRep>) {
          return r.x;
        } else if constexpr (std::is_same_v<T, SeriesRep>) {
          return series_quantile(r, p);
        } else if constexpr (std::is_same_v<T, DiscreteRep>) {
          if (p <= 0.0) return r.lo;
          auto it = std::lower_bound(r.cum.begin(), r.cum.end(), p);
          if (it == r.cum.end()) return r.hi;
          int idx = static_cast<int>(it - r.cum.begin());
          return static_cast<double>(idx + 1) / r.p.size();
        } else {
          return r.g.inverse(r.base->quantile(p));
        }
      },
      rep_);
}

double StrategyCdf::series_quantile(const SeriesRep& r, double p) const {
  if (p <= r.grid_p.front()) return r.lo;
  if (p >= r.grid_p.back()) return r.hi;
  auto it = std::lower_bound(r.grid_p.begin(), r.grid_p.end(), p);
  std::size_t j = it - r.grid_p.begin();
  double lo = r.grid_x[j - 1], hi = r.grid_x[j];
  double x = lo + (hi - lo) * 0.5;
  // Newton with bisection fallback inside the bracket.
  for (int iter = 0; iter < 100; ++iter) {
    double f = series_eval(r, x) - p;
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    if (hi - lo < 1e-13) break;
    double d = density(x);
    double step = d > 0.0 ? f / d : 0.0;
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return 0.5 * (lo + hi);
}

bool StrategyCdf::has_density() const {
  switch (kind()) {
    case Kind::PointMass:
    case Kind::Discrete:
      return false;
    case Kind::Composed:
      return base().has_density();
    default:
      return true;
  }
}

double StrategyCdf::density(double x) const {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClosedFormRep>) {
          if (x < 0.0 || x > 0.75) return 0.0;
          double s = 1.0 - x;
          return 0.5 / (s * std::sqrt(s));
        } else if constexpr (std::is_same_v<T, UniformRep>) {
          return (x >= r.lo && x <= r.hi) ? 1.0 / (r.hi - r.lo) : 0.0;
        } else if constexpr (std::is_same_v<T, SeriesRep>) {
          if (x < r.lo || x > r.hi) return 0.0;
          return r.folded ? r.s.derivative(2.0 * x - 1.0) : r.s.derivative(x);
        } else if constexpr (std::is_same_v<T, ComposedRep>) {
          if (x < r.lo || x > r.hi) return 0.0;
          const auto& ks = r.g.knots();
          if (ks.empty()) return r.base->density(x);  // uniform target
          auto it = std::upper_bound(ks.begin(), ks.end(), x,
                                     [](double v, const auto& k) { return v < k.first; });
          if (it == ks.begin()) it = ks.begin() + 1;
          if (it == ks.end()) it = ks.end() - 1;
          double slope = (it->second - (it - 1)->second) / (it->first - (it - 1)->first);
          return r.base->density(r.g.cdf(x)) * slope;
        } else {
          throw std::domain_error("density: representation has atoms");
        }
      },
      rep_);
}

bool StrategyCdf::has_atoms() const { return !has_density(); }

const SeriesSolution& StrategyCdf::series_solution() const {
  return std::get<SeriesRep>(rep_).s;
}

bool StrategyCdf::series_is_folded() const { return std::get<SeriesRep>(rep_).folded; }

const DiscreteProfile& StrategyCdf::discrete_profile() const {
  return std::get<DiscreteRep>(rep_).p;
}

double StrategyCdf::atom() const { return std::get<PointMassRep>(rep_).x; }

const StrategyCdf& StrategyCdf::base() const { return *std::get<ComposedRep>(rep_).base; }

const TargetModel& StrategyCdf::target() const { return std::get<ComposedRep>(rep_).g; }

}  // namespace guessing
