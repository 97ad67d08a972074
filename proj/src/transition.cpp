#include "transgeo/transition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "transgeo/error.hpp"
#include "transgeo/form.hpp"
#include "transgeo/metric.hpp"

namespace transgeo {

namespace {

std::string t_label(double t) { return "t = " + format_number(t); }

// Evaluates f(t), mapping any failure or non-finite result to EvaluatorDomainError.
double evaluate(const Evaluator& f, double t) {
  double v;
  try {
    v = f(t);
  } catch (const GeometryError& e) {
    fail(ErrorCode::EvaluatorDomainError, "at " + t_label(t) + ": " + e.what());
  }
  if (!std::isfinite(v)) fail(ErrorCode::EvaluatorDomainError, "non-finite value at " + t_label(t));
  return v;
}

// 2 (1 - gen_cos(s)) / t, written as 4 gen_sin(s/2)^2 to avoid cancellation.
double versine_over_t(Param p, double s) {
  const double h = gen_sin(p, s / 2.0);
  return 4.0 * h * h;
}

}  // namespace

std::vector<double> default_grid() {
  std::vector<double> g;
  for (int i = -20; i <= 20; ++i) g.push_back(i / 20.0);
  return g;
}

DataTable SweepTable::as_table() const {
  DataTable out{quantity, metadata, {"t", "value"}, {}};
  for (const SweepRow& r : rows) out.rows.push_back({r.t, r.value});
  return out;
}

SweepTable sweep(std::string quantity, const Evaluator& f, std::span<const double> grid,
                 std::vector<std::pair<std::string, double>> metadata) {
  std::vector<double> ts(grid.begin(), grid.end());
  for (double t : ts) Param{t};
  std::sort(ts.begin(), ts.end());
  SweepTable table{std::move(quantity), std::move(metadata), {}};
  table.rows.reserve(ts.size());
  for (double t : ts) table.rows.push_back({t, evaluate(f, t)});
  return table;
}

LimitEstimate numeric_limit(const Evaluator& f, Side side, const LimitOptions& opts) {
  if (opts.levels < 1 || opts.refinements < opts.levels + 1 || !(opts.t0 > 0.0) || opts.t0 > 1.0)
    fail(ErrorCode::InvalidArgument, "bad limit stencil");
  const double sign = side == Side::Above ? 1.0 : -1.0;

  std::vector<double> vals;
  for (int k = 0; k <= opts.refinements; ++k) {
    const double t = sign * std::ldexp(opts.t0, -k);
    try {
      vals.push_back(evaluate(f, t));
    } catch (const GeometryError&) {
      if (!vals.empty()) throw;  // only the coarse end may leave the domain
    }
  }
  const std::size_t needed = std::max<std::size_t>(opts.min_points, opts.levels + 2);
  if (vals.size() < needed)
    fail(ErrorCode::NoConvergence, "too few stencil points inside the domain");

  LimitEstimate est;
  est.points_used = vals.size();
  const std::size_t n = vals.size();
  const double d1 = std::fabs(vals[n - 3] - vals[n - 2]);
  const double d2 = std::fabs(vals[n - 2] - vals[n - 1]);
  est.order = (d1 > 0.0 && d2 > 0.0) ? std::log2(d1 / d2) : std::numeric_limits<double>::quiet_NaN();

  std::vector<double> r = std::move(vals);
  for (int lev = 1; lev <= opts.levels; ++lev) {
    const double w = std::ldexp(1.0, lev);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] = (w * r[i + 1] - r[i]) / (w - 1.0);
    r.pop_back();
  }
  est.value = r.back();
  est.error = std::fabs(r[r.size() - 1] - r[r.size() - 2]);
  if (est.error > opts.tol * std::max(1.0, std::fabs(est.value)))
    fail(ErrorCode::NoConvergence, "extrapolants differ by " + format_number(est.error));
  return est;
}

bool limits_agree(const LimitEstimate& above, const LimitEstimate& below) {
  const double scale = std::max(std::fabs(above.value), std::fabs(below.value));
  const double tol = std::max(2.0 * std::max(above.error, below.error),
                              8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale));
  return std::fabs(above.value - below.value) <= tol;
}

std::string SeriesEstimate::to_json() const {
  std::string out = "{\"coefficients\":[";
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out += (i ? "," : "") + format_number(coefficients[i], true);
  return out + "],\"residual\":" + format_number(residual, true) + "}\n";
}

SeriesEstimate series_fit(const Evaluator& f, int order, const SeriesOptions& opts) {
  if (order < 0 || order > kMaxSeriesOrder)
    fail(ErrorCode::IllConditioned, "series order must be between 0 and 4");
  if (opts.points < static_cast<std::size_t>(order) + 1 || opts.points < 2)
    fail(ErrorCode::IllConditioned, "stencil has fewer points than coefficients");
  if (!(opts.half_width > 0.0) || opts.half_width > 1.0)
    fail(ErrorCode::InvalidArgument, "stencil half-width must lie in (0, 1]");

  const auto n = static_cast<Eigen::Index>(opts.points);
  const double h = opts.half_width;
  // Fit in tau = t / h for conditioning, then rescale.
  Eigen::MatrixXd vander(n, order + 1);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double tau = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    y(i) = evaluate(f, tau * h);
    double power = 1.0;
    for (int k = 0; k <= order; ++k, power *= tau) vander(i, k) = power;
  }
  const Eigen::VectorXd c = vander.colPivHouseholderQr().solve(y);

  SeriesEstimate est;
  est.residual = (vander * c - y).cwiseAbs().maxCoeff();
  for (int k = 0; k <= order; ++k) est.coefficients.push_back(c(k) / std::pow(h, k));
  return est;
}

PythagorasTransitionReport pythagoras_transition_check(double x, double y,
                                                       std::span<const double> grid) {
  if (x == 0.0 || y == 0.0 || !std::isfinite(x) || !std::isfinite(y))
    fail(ErrorCode::DegenerateTriangle, "legs must be finite and nonzero");

  struct Sides {
    Param p;
    double ab, ac, bc;
  };
  const auto sides = [&](double t) {
    const Param p(t);
    const ModelPoint a = normalize_point(p, {0.0, 0.0, 1.0});
    const ModelPoint b = normalize_point(p, {x, 0.0, 1.0});
    const ModelPoint c = normalize_point(p, {0.0, y, 1.0});
    return Sides{p, distance(a, b), distance(a, c), distance(b, c)};
  };

  PythagorasTransitionReport rep;
  rep.x = x;
  rep.y = y;
  for (double t : grid) {
    const Sides s = sides(t);
    const double lhs = gen_cos(s.p, s.ab) * gen_cos(s.p, s.ac);
    const double rhs = gen_cos(s.p, s.bc);
    rep.max_identity_residual =
        std::max(rep.max_identity_residual, s.p.sqrt_abs() * std::fabs(lhs - rhs));
  }

  const auto leg_x = [&](double t) { const Sides s = sides(t); return versine_over_t(s.p, s.ab); };
  const auto leg_y = [&](double t) { const Sides s = sides(t); return versine_over_t(s.p, s.ac); };
  const auto hyp = [&](double t) { const Sides s = sides(t); return versine_over_t(s.p, s.bc); };

  rep.leg_x_limit = numeric_limit(leg_x, Side::Above).value;
  rep.leg_y_limit = numeric_limit(leg_y, Side::Above).value;
  rep.hypotenuse_limit = numeric_limit(hyp, Side::Above).value;
  rep.leg_x_limit_below = numeric_limit(leg_x, Side::Below).value;
  rep.leg_y_limit_below = numeric_limit(leg_y, Side::Below).value;
  rep.hypotenuse_limit_below = numeric_limit(hyp, Side::Below).value;

  const double target = x * x + y * y;
  rep.relation_residual =
      std::max(std::fabs(rep.leg_x_limit + rep.leg_y_limit - rep.hypotenuse_limit),
               std::fabs(rep.leg_x_limit_below + rep.leg_y_limit_below - rep.hypotenuse_limit_below));
  rep.euclidean_residual = std::max(std::fabs(rep.hypotenuse_limit - target),
                                    std::fabs(rep.hypotenuse_limit_below - target));

  rep.naive_limit = numeric_limit(
                        [&](double t) {
                          const Sides s = sides(t);
                          return gen_cos(s.p, s.ab) * gen_cos(s.p, s.ac);
                        },
                        Side::Above)
                        .value;

  const auto unscaled = [&](double t) {
    const Sides s = sides(t);
    return std::sqrt(t) * (1.0 - gen_cos(s.p, s.ab) * gen_cos(s.p, s.ac));
  };
  const LimitOptions stencil;
  const double t_fine = std::ldexp(stencil.t0, -stencil.refinements);
  rep.rearrangement_order = std::log2(unscaled(2.0 * t_fine) / unscaled(t_fine));
  return rep;
}

}  // namespace transgeo
