#pragma once

// Numerical machinery for following a fixed geometric configuration through
// t = 0: parameter sweeps, one-sided limits and Taylor coefficients in t.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "transgeo/io.hpp"

namespace transgeo {

/// A scalar quantity of the configuration as a function of t.
using Evaluator = std::function<double(double)>;

/// 41 points uniform on [-1, 1], containing 0 exactly.
std::vector<double> default_grid();

struct SweepRow {
  double t;
  double value;
};

struct SweepTable {
  std::string quantity;
  std::vector<std::pair<std::string, double>> metadata;
  std::vector<SweepRow> rows;  // sorted by t

  /// Columns "t" and "value".
  DataTable as_table() const;
};

/// Evaluates f at every grid point. Evaluator failures surface as
/// EvaluatorDomainError naming the offending t.
SweepTable sweep(std::string quantity, const Evaluator& f, std::span<const double> grid,
                 std::vector<std::pair<std::string, double>> metadata = {});

enum class Side { Above, Below };

struct LimitOptions {
  double t0 = 0.1;
  int refinements = 10;  // stencil t_k = +-t0 2^-k, k = 0..refinements
  int levels = 4;        // Richardson extrapolation levels
  double tol = 1e-6;     // NoConvergence above tol * max(1, |limit|)
  std::size_t min_points = 6;
};

struct LimitEstimate {
  double value = 0.0;
  double error = 0.0;  // difference of the two finest extrapolants
  double order = 0.0;  // observed order of the raw sequence; NaN when it is constant
  std::size_t points_used = 0;
};

/// Richardson-extrapolated limit of f(t) as t -> 0 from one side. Leading
/// (coarsest) stencil points where f is undefined are skipped.
LimitEstimate numeric_limit(const Evaluator& f, Side side, const LimitOptions& opts = {});

struct SeriesOptions {
  double half_width = 0.005;
  std::size_t points = 9;
};

struct SeriesEstimate {
  std::vector<double> coefficients;  // c_0 .. c_k of f(t) = sum c_j t^j
  double residual = 0.0;             // max |fit - data| on the stencil

  std::string to_json() const;
};

inline constexpr int kMaxSeriesOrder = 4;

/// Least-squares polynomial fit of degree `order` (<= 4) on a symmetric stencil.
SeriesEstimate series_fit(const Evaluator& f, int order, const SeriesOptions& opts = {});

/// Two-sided agreement tolerance between limits from above and below:
/// 2x the larger error estimate, floored at a few ulps of the value.
bool limits_agree(const LimitEstimate& above, const LimitEstimate& below);

/// How the spherical/hyperbolic Pythagorean theorem of the coherent right
/// triangle A = (0,0,1), B = (x,0,1), C = (0,y,1) becomes c^2 = a^2 + b^2.
struct PythagorasTransitionReport {
  double x = 0.0, y = 0.0;
  /// max over the grid of sqrt|t| |gen_cos(AB) gen_cos(AC) - gen_cos(BC)|.
  double max_identity_residual = 0.0;
  /// Limits of 2 (1 - gen_cos(D)) / t from above, per side.
  double leg_x_limit = 0.0, leg_y_limit = 0.0, hypotenuse_limit = 0.0;
  /// Same limits from below (through the hyperbolic side).
  double leg_x_limit_below = 0.0, leg_y_limit_below = 0.0, hypotenuse_limit_below = 0.0;
  /// max of |leg_x + leg_y - hypotenuse| over both sides.
  double relation_residual = 0.0;
  /// max of |hypotenuse - (x^2 + y^2)| over both sides.
  double euclidean_residual = 0.0;
  /// Limit of gen_cos(AB) gen_cos(AC): the uninformative 1 = 1 x 1.
  double naive_limit = 0.0;
  /// Observed order in t of sqrt(t) (1 - cos(AB) cos(AC)) as t -> 0+ (expect 1.5).
  double rearrangement_order = 0.0;
};

PythagorasTransitionReport pythagoras_transition_check(double x, double y,
                                                       std::span<const double> grid);

}  // namespace transgeo
