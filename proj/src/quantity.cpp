#include "transgeo/quantity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "transgeo/error.hpp"
#include "transgeo/form.hpp"
#include "transgeo/metric.hpp"
#include "transgeo/triangle.hpp"

namespace transgeo {

namespace {

ModelPoint apex(Param p) { return normalize_point(p, {0.0, 0.0, 1.0}); }
ModelPoint ray_b(Param p, double x) { return normalize_point(p, {x, 0.0, 1.0}); }
ModelPoint ray_c(Param p, double y) { return normalize_point(p, {0.0, y, 1.0}); }

double euler_expansion(double t, double a, double b) {
  // 1 - Q^2 = (1 - cos sa)(1 - cos sb) / (2 (1 + cos sa cos sb))
  const Param p(t);
  const double ha = gen_sin(p, a / 2.0);
  const double hb = gen_sin(p, b / 2.0);
  const double num = 4.0 * t * t * ha * ha * hb * hb;
  return num / (2.0 * (1.0 + gen_cos(p, a) * gen_cos(p, b)));
}

DataTable table_residuals(const QuantityConfig& cfg, std::span<const double> grid) {
  DataTable out{"table-residuals",
                {{"x", cfg.x}, {"y", cfg.y}},
                {"t", "r1", "r2", "r3", "r4", "r5", "r6"},
                {}};
  std::vector<double> ts(grid.begin(), grid.end());
  std::sort(ts.begin(), ts.end());
  for (double t : ts) {
    std::array<double, 6> r{};
    try {
      r = right_triangle_table_check(
          with_right_angle_at_c(build_right_triangle(Param(t), cfg.x, cfg.y)));
    } catch (const GeometryError& e) {
      if (e.code() == ErrorCode::InvalidParam) throw;
      fail(ErrorCode::EvaluatorDomainError, "at t = " + format_number(t) + ": " + e.what());
    }
    out.rows.push_back({t, r[0], r[1], r[2], r[3], r[4], r[5]});
  }
  return out;
}

DataTable surface_profile(std::span<const double> grid) {
  DataTable out{"surface-profile", {}, {"t", "x", "z"}, {}};
  std::vector<double> ts(grid.begin(), grid.end());
  std::sort(ts.begin(), ts.end());
  for (double t : ts) {
    const Param p(t);
    for (int i = 0; i < kProfileSamples; ++i) {
      const double u = static_cast<double>(i) / (kProfileSamples - 1);
      if (t > 0.0) {
        const double th = 2.0 * std::numbers::pi * u;
        out.rows.push_back({t, std::sin(th) / p.sqrt_abs(), std::cos(th)});
      } else {
        const double x = -2.0 + 4.0 * u;
        out.rows.push_back({t, x, std::sqrt(1.0 - t * x * x)});
      }
    }
  }
  return out;
}

}  // namespace

Evaluator scalar_quantity(const std::string& name, const QuantityConfig& cfg) {
  const double x = cfg.x;
  const double y = cfg.y;
  if (name == "distance") {
    if (cfg.p.has_value() != cfg.q.has_value())
      fail(ErrorCode::InvalidArgument, "distance needs both p and q or neither");
    if (cfg.p) {
      const Vec3 u = *cfg.p;
      const Vec3 v = *cfg.q;
      return [u, v](double t) {
        const Param p(t);
        return distance(normalize_point(p, u), normalize_point(p, v));
      };
    }
    return [x](double t) {
      const Param p(t);
      return distance(apex(p), ray_b(p, x));
    };
  }
  if (name == "hypotenuse")
    return [x, y](double t) {
      const Param p(t);
      return distance(ray_b(p, x), ray_c(p, y));
    };
  if (name == "angle")
    return [x, y](double t) {
      const Param p(t);
      return angle(apex(p), ray_b(p, x), ray_c(p, y));
    };
  if (name == "angle-b")
    return [x, y](double t) {
      const Param p(t);
      return angle(ray_b(p, x), apex(p), ray_c(p, y));
    };
  if (name == "area")
    return [x, y](double t) { return measure(build_right_triangle(Param(t), x, y)).area; };
  if (name == "pyth-residual")
    return [x, y](double t) {
      return pythagoras_check(with_right_angle_at_c(build_right_triangle(Param(t), x, y)));
    };
  if (name == "euler-expansion") return [x, y](double t) { return euler_expansion(t, x, y); };
  fail(ErrorCode::UnknownQuantity, "unknown quantity '" + name + "'");
}

std::vector<std::string> quantity_names() {
  return {"distance",      "hypotenuse",      "angle",           "angle-b",        "area",
          "pyth-residual", "euler-expansion", "table-residuals", "surface-profile"};
}

DataTable sweep_table(const std::string& name, const QuantityConfig& cfg,
                      std::span<const double> grid) {
  if (name == "table-residuals") return table_residuals(cfg, grid);
  if (name == "surface-profile") return surface_profile(grid);
  std::vector<std::pair<std::string, double>> meta{{"x", cfg.x}, {"y", cfg.y}};
  if (cfg.p && cfg.q) {
    meta = {{"px", cfg.p->x}, {"py", cfg.p->y}, {"pz", cfg.p->z},
            {"qx", cfg.q->x}, {"qy", cfg.q->y}, {"qz", cfg.q->z}};
  }
  return sweep(name, scalar_quantity(name, cfg), grid, std::move(meta)).as_table();
}

DataTable geodesic_polyline(double t, const Vec3& p, const Vec3& q, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "polyline needs at least one segment");
  const Param par(t);
  const ModelPoint a = normalize_point(par, p);
  const ModelPoint b = normalize_point(par, q);
  const Vec3 dir = unit_tangent_toward(a, b);
  const double len = distance(a, b);
  DataTable out{"geodesic", {{"t", t}, {"length", len}}, {"s", "x", "y", "z"}, {}};
  for (int i = 0; i <= n; ++i) {
    const double s = len * i / n;
    // Raw curve, not canonicalized, so the polyline stays continuous.
    const Vec3 v = gen_cos(par, s) * a.rep() + gen_sin(par, s) * dir;
    out.rows.push_back({s, v.x, v.y, v.z});
  }
  return out;
}

}  // namespace transgeo
