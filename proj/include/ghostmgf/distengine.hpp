#pragma once

#include <string>
#include <vector>

#include "ghostmgf/bigfloat.hpp"
#include "ghostmgf/ratfun.hpp"

namespace ghostmgf {

/// coefficient / (pole - t)^order
struct PartialFractionTerm {
  Scalar pole;
  int order = 1;
  Scalar coefficient;

  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

/// Exact decomposition of a proper rational function, sorted by pole and then
/// by decreasing order. Throws std::invalid_argument when deg numer >= deg denom.
std::vector<PartialFractionTerm> partial_fractions(const RatFun& r);

/// Sum of the terms as a single rational value at a non-pole point.
Scalar eval_partial_fractions(const std::vector<PartialFractionTerm>& terms, const Scalar& t);

/// Density on x >= 0 as a finite mixture of weight * x^(degree-1)/(degree-1)! * exp(-rate x).
struct DensityModel {
  struct Term {
    Scalar rate;
    int degree = 1;
    Scalar weight;

    /// Coefficient of x^(degree-1) e^(-rate x) once the factorial is folded in.
    Scalar poly_coefficient() const;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  /// Exact integral over [0, inf).
  Scalar total_mass() const;
  /// Exact first moment.
  Scalar mean() const;
  friend bool operator==(const DensityModel&, const DensityModel&) = default;
};

DensityModel density(const RatFun& r);

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(x) with relative error <= rel_tol; precision doubles until two
/// successive evaluations agree.
BigFloat density_eval(const DensityModel& d, double x, double rel_tol = 1e-12);
/// Cumulative distribution P(C <= x), same precision contract.
BigFloat cdf_eval(const DensityModel& d, double x, double rel_tol = 1e-12);

struct GridPoint {
  double x;
  double value;
};

/// Uniform grid on [0, x_max] with `points` >= 2 nodes.
std::vector<GridPoint> density_grid(const DensityModel& d, double x_max, int points, double rel_tol = 1e-12);

/// "x,density" header and rows with 10 significant digits.
std::string grid_to_csv(const std::vector<GridPoint>& grid, const std::string& value_name = "density");

/// Discrete log-concavity on the positive part of the grid: f_i^2 >= f_{i-1} f_{i+1} (1 - slack).
bool grid_log_concave(const std::vector<GridPoint>& grid, double slack = 1e-9);

}  // namespace ghostmgf
