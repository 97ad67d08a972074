#include "transgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "transgeo/error.hpp"
#include "transgeo/form.hpp"
#include "transgeo/group.hpp"
#include "transgeo/metric.hpp"
#include "transgeo/transition.hpp"
#include "transgeo/triangle.hpp"

namespace transgeo {

namespace {

constexpr int kSamples = 50;
constexpr double kNoT = std::numeric_limits<double>::quiet_NaN();

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Point of the z = 1 slice within the cone, at most `radius` from the apex ray.
ModelPoint random_point(Param p, Rng& rng, double radius = 2.0) {
  if (p.t() < 0.0) radius = std::min(radius, 0.9 / p.sqrt_abs());
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  const double th = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return normalize_point(p, {r * std::cos(th), r * std::sin(th), 1.0});
}

Triangle random_triangle(Param p, Rng& rng) {
  for (;;) {
    try {
      return Triangle::make(random_point(p, rng, 1.0), random_point(p, rng, 1.0),
                            random_point(p, rng, 1.0));
    } catch (const GeometryError&) {
    }
  }
}

Isometry random_isometry(Param p, Rng& rng) {
  const ModelPoint c = random_point(p, rng);
  return coherent_translation(uniform(rng, -1.0, 1.0), p) *
         stabilizer_rotation(c, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

class Battery {
 public:
  Battery(std::vector<Check>& out, std::optional<double> tol) : out_(out), tol_(tol) {}

  // Records max over the samples of `measure`; the check passes when it stays
  // below the tolerance. Any library error is recorded as a failure.
  void run(const std::string& suite, const std::string& name, double t, double tolerance,
           const std::function<double()>& measure) {
    const double tl = tol_.value_or(tolerance);
    double value;
    try {
      value = measure();
    } catch (const std::exception&) {
      value = std::numeric_limits<double>::infinity();
    }
    out_.push_back({suite, name, t, value, tl, std::isfinite(value) && value <= tl});
  }

 private:
  std::vector<Check>& out_;
  std::optional<double> tol_;
};

void form_suite(Battery& b, std::span<const double> grid) {
  for (double t : grid) {
    const Param p(t);
    Rng rng(11);
    b.run("form", "polarization", t, 1e-12, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const Vec3 u{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        const Vec3 v{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        const double pol = (quad_form(p, u + v) - quad_form(p, u) - quad_form(p, v)) / 2.0;
        worst = std::max(worst, std::fabs(pol - bilinear_form(p, u, v)));
      }
      return worst;
    });
    b.run("form", "gen-pythagorean", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double s = -10.0 + 0.1 * i;
        const double c = gen_cos(p, s);
        const double sn = gen_sin(p, s);
        worst = std::max(worst, std::fabs(c * c + t * sn * sn - 1.0) / std::max(1.0, c * c));
      }
      return worst;
    });
    b.run("form", "normalize-idempotent", t, 1e-12, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const ModelPoint x = random_point(p, rng);
        const Vec3 again = normalize_point(p, x.rep()).rep();
        const Vec3 flipped = normalize_point(p, -1.0 * x.rep()).rep();
        worst = std::max({worst, max_abs(again - x.rep()), max_abs(flipped - x.rep()),
                          std::fabs(quad_form(p, x.rep()) - 1.0)});
      }
      return worst;
    });
    b.run("form", "metric-positive", t, 0.0, [&] {
      int bad = 0;
      for (int i = 0; i < kSamples; ++i) {
        const ModelPoint x = random_point(p, rng);
        const ModelPoint y = random_point(p, rng);
        if (same_point(x, y)) continue;
        const Vec3 u = tangent_toward(x, y);
        if (!(tangent_metric(x, u, u) > 0.0)) ++bad;
      }
      return static_cast<double>(bad);
    });
  }
}

void metric_suite(Battery& b, std::span<const double> grid) {
  for (double t : grid) {
    const Param p(t);
    Rng rng(23);
    b.run("metric", "triangle-inequality", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const ModelPoint x = random_point(p, rng);
        const ModelPoint y = random_point(p, rng);
        const ModelPoint z = random_point(p, rng);
        worst = std::max(worst, distance(x, z) - distance(x, y) - distance(y, z));
      }
      return worst;
    });
    b.run("metric", "geodesic-length", t, 1e-9, [&] {
      double worst = 0.0;
      const double smax = t > 0.0 ? std::numbers::pi / (2.0 * p.sqrt_abs()) : 3.0;
      for (int i = 0; i < kSamples; ++i) {
        const ModelPoint x = random_point(p, rng);
        const ModelPoint y = random_point(p, rng);
        if (same_point(x, y)) continue;
        const double s = uniform(rng, 0.0, smax);
        worst = std::max(worst,
                         std::fabs(distance(x, geodesic_point(x, unit_tangent_toward(x, y), s)) - s));
      }
      return worst;
    });
    b.run("metric", "isometry-invariance", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const Isometry m = random_isometry(p, rng);
        const ModelPoint x = random_point(p, rng);
        const ModelPoint y = random_point(p, rng);
        worst = std::max(worst, std::fabs(distance(m.apply(x), m.apply(y)) - distance(x, y)));
      }
      return worst;
    });
    b.run("metric", "bisector-concurrency", t, 1e-8, [&] {
      double worst = 0.0;
      for (int i = 0; i < 10; ++i)
        worst = std::max(worst, angle_bisector_spread(random_triangle(p, rng).vertices()));
      return worst;
    });
    if (t > 0.0) {
      b.run("metric", "pole-equator", t, 1e-12, [&] {
        double worst = 0.0;
        for (int i = 0; i < kSamples; ++i) {
          const ModelPoint x = random_point(p, rng);
          worst = std::max(worst, max_abs(pole(equator(x)).rep() - x.rep()));
        }
        return worst;
      });
    }
  }
}

void group_suite(Battery& b, std::span<const double> grid) {
  for (double t : grid) {
    const Param p(t);
    Rng rng(37);
    b.run("group", "involution-order-two", t, 1e-12, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const Isometry s = involution(random_point(p, rng));
        worst = std::max(worst, max_abs_diff((s * s).matrix(), Mat3::identity()));
      }
      return worst;
    });
    b.run("group", "conjugation", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const Isometry m = random_isometry(p, rng);
        const ModelPoint x = random_point(p, rng);
        const Mat3 lhs = (m * involution(x) * m.inverse()).matrix();
        worst = std::max(worst, max_abs_diff(lhs, involution(m.apply(x)).matrix()));
      }
      return worst;
    });
    b.run("group", "translation-distance", t, 1e-10, [&] {
      double worst = 0.0;
      const ModelPoint o = normalize_point(p, {0.0, 0.0, 1.0});
      for (int i = 0; i < kSamples; ++i) {
        double d = uniform(rng, -1.5, 1.5);
        worst = std::max(worst, std::fabs(distance(o, coherent_translation(d, p).apply(o)) -
                                          std::fabs(d)));
      }
      return worst;
    });
    b.run("group", "line-axiom", t, 1e-10, [&] {
      const ModelPoint x = random_point(p, rng, 1.0);
      const ModelPoint y = random_point(p, rng, 1.0);
      const Vec3 dir = unit_tangent_toward(x, y);
      std::vector<ModelPoint> pts;
      for (double s : {0.0, 0.3, 0.7, 1.1}) pts.push_back(geodesic_point(x, dir, s));
      const LineAxiomReport r = line_axiom_check(pts);
      const bool control_ok = t == 0.0 || r.control_deviation > 1e-3;
      return control_ok ? r.max_deviation : std::numeric_limits<double>::infinity();
    });
  }
}

void trig_suite(Battery& b, std::span<const double> grid) {
  for (double t : grid) {
    const Param p(t);
    Rng rng(41);
    const double leg_max = t > 0.0 ? 1.2 / p.sqrt_abs() : 2.0;
    b.run("trig", "pythagoras", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const Triangle tri =
            right_triangle_from_legs(p, uniform(rng, 0.1, leg_max), uniform(rng, 0.1, leg_max));
        worst = std::max(worst, pythagoras_check(tri));
      }
      return worst;
    });
    b.run("trig", "right-triangle-table", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const Triangle tri =
            right_triangle_from_legs(p, uniform(rng, 0.1, leg_max), uniform(rng, 0.1, leg_max));
        for (double r : right_triangle_table_check(tri)) worst = std::max(worst, r);
      }
      return worst;
    });
    b.run("trig", "sine-rule", t, 1e-10, [&] {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const auto r = sine_rule_ratios(random_triangle(p, rng));
        worst = std::max(worst, *std::max_element(r.begin(), r.end()) -
                                    *std::min_element(r.begin(), r.end()));
      }
      return worst;
    });
    b.run("trig", "excess-sign", t, 0.0, [&] {
      int bad = 0;
      for (int i = 0; i < kSamples; ++i) {
        const TriangleMeasurements m = measure(random_triangle(p, rng));
        const double excess = m.angle_sum() - std::numbers::pi;
        if (t == 0.0 ? std::fabs(excess) > 1e-9 : !(excess * t > 0.0)) ++bad;
      }
      return static_cast<double>(bad);
    });
    if (t > 0.0) {
      b.run("trig", "euler-area", t, 1e-9, [&] {
        double worst = 0.0;
        for (int i = 0; i < kSamples; ++i) {
          const TriangleMeasurements m = measure(random_triangle(p, rng));
          worst = std::max(worst, std::fabs(area_euler(p, m.a, m.b, m.c) - m.area));
        }
        return worst;
      });
    }
  }
}

void transition_suite(Battery& b) {
  const auto dist = [](double x0, double y0, double x1, double y1) {
    return [=](double t) {
      const Param p(t);
      return distance(normalize_point(p, {x0, y0, 1.0}), normalize_point(p, {x1, y1, 1.0}));
    };
  };
  for (auto [x, y] : {std::pair{1.0, 1.0}, {3.0, 4.0}, {0.2, 5.0}}) {
    const std::string tag = "hypotenuse-limit(" + format_number(x) + "," + format_number(y) + ")";
    b.run("transition", tag, kNoT, 1e-8, [&] {
      const Evaluator f = dist(x, 0.0, 0.0, y);
      const double target = std::hypot(x, y);
      const LimitEstimate up = numeric_limit(f, Side::Above);
      const LimitEstimate down = numeric_limit(f, Side::Below);
      return std::max(std::fabs(up.value - target), std::fabs(down.value - target));
    });
  }
  for (double x : {0.5, 1.0, 2.0}) {
    b.run("transition", "distance-series(" + format_number(x) + ")", kNoT, 1e-6, [&] {
      const SeriesEstimate s = series_fit(dist(0.0, 0.0, x, 0.0), 4);
      return std::max({std::fabs(s.coefficients[0] - x),
                       std::fabs(s.coefficients[1] + x * x * x / 3.0),
                       std::fabs(s.coefficients[2] - std::pow(x, 5) / 5.0)});
    });
  }
  b.run("transition", "pythagoras-limit(3,4)", kNoT, 1e-6, [&] {
    std::vector<double> grid;
    for (double t : default_grid())
      if (1.0 + 16.0 * t > 0.0) grid.push_back(t);
    const PythagorasTransitionReport r = pythagoras_transition_check(3.0, 4.0, grid);
    return std::max(r.euclidean_residual, r.relation_residual);
  });
  b.run("transition", "area-limit(1,1)", kNoT, 1e-6, [&] {
    const Evaluator f = [](double t) { return measure(build_right_triangle(Param(t), 1.0, 1.0)).area; };
    return std::max(std::fabs(numeric_limit(f, Side::Above).value - 0.5),
                    std::fabs(numeric_limit(f, Side::Below).value - 0.5));
  });
}

}  // namespace

std::vector<std::string> suite_names() { return {"form", "metric", "group", "trig", "transition"}; }

std::vector<Check> run_verification(const std::string& suite, std::span<const double> grid,
                                    std::optional<double> tol) {
  const auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    fail(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  if (tol && !(*tol >= 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  for (double t : grid) Param{t};

  std::vector<Check> out;
  Battery b(out, tol);
  const auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("form")) form_suite(b, grid);
  if (want("metric")) metric_suite(b, grid);
  if (want("group")) group_suite(b, grid);
  if (want("trig")) trig_suite(b, grid);
  if (want("transition")) transition_suite(b);
  return out;
}

}  // namespace transgeo
