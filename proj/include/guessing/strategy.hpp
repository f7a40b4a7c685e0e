#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "guessing/types.hpp"

namespace guessing {

// Truncated power-series CDF on [0, support_upper]. coefficients[k]
// multiplies x^k; coefficients[0] is 0 for every solution produced here.
struct SeriesSolution {
  std::vector<double> coefficients;
  double support_upper = 1.0;
  int truncation_order = 0;
  Rule rule = Rule::PriceIsRight;
  int players = 2;

  double value(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;
  double third_derivative(double t) const;
};

// Probability vector over the grid {1..N}.
struct DiscreteProfile {
  std::vector<double> probs;

  int size() const { return static_cast<int>(probs.size()); }
  void validate() const;  // nonnegative entries summing to 1 within 1e-12
};

// A mixed strategy represented by its CDF. Evaluation clamps outside the
// support: 0 below, 1 above. quantile(p) is the least x with F(x) >= p.
class StrategyCdf {
 public:
  enum class Kind { ClosedFormPir2, Uniform, PointMass, Series, Discrete, Composed };

  // F(x) = 1/sqrt(1-x) - 1 on [0, 3/4]; the two-player Price-Is-Right optimum.
  static StrategyCdf pir2_closed_form();
  static StrategyCdf uniform(double lo, double hi);
  static StrategyCdf point_mass(double x);
  // CDF equal to the series partial sum on [0, u].
  static StrategyCdf series(SeriesSolution s);
  // CDF 1/2 + s(2x-1)/2 on [(1-u)/2, (1+u)/2], for an odd series s.
  static StrategyCdf folded_series(SeriesSolution odd_series);
  // Staircase CDF with atoms p_i at x_i = i/N.
  static StrategyCdf discrete(DiscreteProfile p);
  // CDF x -> base(G(x)).
  static StrategyCdf composed(StrategyCdf base, TargetModel g);

  Kind kind() const;
  double support_lo() const;
  double support_hi() const;

  double evaluate(double x) const;
  double quantile(double p) const;

  bool has_density() const;
  double density(double x) const;
  bool has_atoms() const;

  // Representation accessors; throw unless kind() matches.
  const SeriesSolution& series_solution() const;
  bool series_is_folded() const;
  const DiscreteProfile& discrete_profile() const;
  double atom() const;
  const StrategyCdf& base() const;
  const TargetModel& target() const;

 private:
  struct ClosedFormRep {};
  struct UniformRep {
    double lo, hi;
  };
  struct PointMassRep {
    double x;
  };
  struct SeriesRep {
    SeriesSolution s;
    bool folded;
    double lo, hi;
    // Monotone (F, x) table for quantile bracketing; refined by Newton.
    std::vector<double> grid_x, grid_p;
  };
  struct DiscreteRep {
    DiscreteProfile p;
    std::vector<double> cum;
    double lo, hi;
  };
  struct ComposedRep {
    std::shared_ptr<const StrategyCdf> base;
    TargetModel g;
    double lo, hi;
  };
  using Rep = std::variant<ClosedFormRep, UniformRep, PointMassRep, SeriesRep,
                           DiscreteRep, ComposedRep>;

  explicit StrategyCdf(Rep rep) : rep_(std::move(rep)) {}

  double series_eval(const SeriesRep& r, double x) const;
  double series_quantile(const SeriesRep& r, double p) const;

  Rep rep_;
};

}  // namespace guessing
