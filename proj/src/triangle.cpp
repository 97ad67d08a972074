#include "transgeo/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "transgeo/error.hpp"
#include "transgeo/metric.hpp"

namespace transgeo {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Triangle Triangle::make(const ModelPoint& a, const ModelPoint& b, const ModelPoint& c) {
  const Param p = a.param();
  if (!(b.param() == p) || !(c.param() == p)) fail(ErrorCode::MixedParam, "vertices differ in t");
  if (same_point(a, b) || same_point(b, c) || same_point(c, a))
    fail(ErrorCode::DegenerateTriangle, "vertices must be pairwise distinct");
  if (std::fabs(triple(a.rep(), b.rep(), c.rep())) <= 1e-10)
    fail(ErrorCode::DegenerateTriangle, "vertices are collinear");
  if (p.t() > 0.0) {
    const double sign = bilinear_form(p, a.rep(), b.rep()) * bilinear_form(p, b.rep(), c.rep()) *
                        bilinear_form(p, c.rep(), a.rep());
    if (!(sign >= 0.0))
      fail(ErrorCode::DegenerateTriangle, "minor arcs do not bound a single triangle");
  }
  return Triangle({a, b, c});
}

Triangle Triangle::rotated() const { return Triangle({v_[1], v_[2], v_[0]}); }

TriangleMeasurements measure(const Triangle& tri) {
  const ModelPoint& A = tri.A();
  const ModelPoint& B = tri.B();
  const ModelPoint& C = tri.C();
  TriangleMeasurements m;
  m.t = tri.param().t();
  m.a = distance(B, C);
  m.b = distance(A, C);
  m.c = distance(A, B);
  m.A = angle(A, B, C);
  m.B = angle(B, C, A);
  m.C = angle(C, A, B);
  if (m.t == 0.0) {
    const Vec3 ab = B.rep() - A.rep();
    const Vec3 ac = C.rep() - A.rep();
    m.area = 0.5 * std::fabs(ab.x * ac.y - ab.y * ac.x);
  } else {
    m.area = (m.angle_sum() - kPi) / m.t;
  }
  return m;
}

Triangle with_right_angle_at_c(const Triangle& tri, double tol) {
  Triangle cur = tri;
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(angle(cur.C(), cur.A(), cur.B()) - kPi / 2.0) <= tol) return cur;
    cur = cur.rotated();
  }
  fail(ErrorCode::NoRightAngle, "triangle has no right angle");
}

namespace {

void require_right_at_c(const Triangle& tri) {
  if (std::fabs(angle(tri.C(), tri.A(), tri.B()) - kPi / 2.0) > kRightAngleTolerance)
    fail(ErrorCode::NoRightAngle, "the angle at C is not right");
}

}  // namespace

double pythagoras_check(const Triangle& tri) {
  require_right_at_c(tri);
  const Param p = tri.param();
  const TriangleMeasurements m = measure(tri);
  if (p.t() == 0.0) return std::fabs(m.c * m.c - m.a * m.a - m.b * m.b);
  return std::fabs(gen_cos(p, m.c) - gen_cos(p, m.a) * gen_cos(p, m.b));
}

std::array<double, 6> right_triangle_table_check(const Triangle& tri) {
  require_right_at_c(tri);
  const Param p = tri.param();
  const TriangleMeasurements m = measure(tri);
  const auto gc = [&](double s) { return gen_cos(p, s); };
  const auto gs = [&](double s) { return gen_sin(p, s); };
  const auto gt = [&](double s) { return gen_tan(p, s); };
  const double first = p.t() == 0.0 ? std::fabs(m.c * m.c - m.a * m.a - m.b * m.b)
                                    : std::fabs(gc(m.c) - gc(m.a) * gc(m.b));
  return {first,
          std::fabs(gs(m.b) - gs(m.c) * std::sin(m.B)),
          std::fabs(gt(m.a) - gt(m.c) * std::cos(m.B)),
          std::fabs(gc(m.c) - 1.0 / (std::tan(m.A) * std::tan(m.B))),
          std::fabs(std::cos(m.A) - gc(m.a) * std::sin(m.B)),
          std::fabs(gt(m.a) - gs(m.b) * std::tan(m.A))};
}

std::array<double, 3> sine_rule_ratios(const Triangle& tri) {
  const Param p = tri.param();
  const TriangleMeasurements m = measure(tri);
  return {gen_sin(p, m.a) / std::sin(m.A), gen_sin(p, m.b) / std::sin(m.B),
          gen_sin(p, m.c) / std::sin(m.C)};
}

double area_euler(Param p, double a, double b, double c) {
  if (p.t() <= 0.0) fail(ErrorCode::NonPositiveParam, "Euler's area formula needs t > 0");
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0) || !std::isfinite(a + b + c))
    fail(ErrorCode::InvalidSides, "side lengths must be finite and non-negative");
  const double slack = 1e-12 * std::max({1.0, a, b, c});
  if (a > b + c + slack || b > a + c + slack || c > a + b + slack)
    fail(ErrorCode::InvalidSides, "side lengths violate the triangle inequality");
  const double s = p.sqrt_abs();
  if (s * std::max({a, b, c}) >= kPi) fail(ErrorCode::InvalidSides, "side exceeds half a great circle");

  const double num = 1.0 + std::cos(s * a) + std::cos(s * b) + std::cos(s * c);
  const double den = 4.0 * std::cos(s * a / 2.0) * std::cos(s * b / 2.0) * std::cos(s * c / 2.0);
  double q = num / den;
  if (q > 1.0 + 1e-12 || q < -1.0 - 1e-12)
    fail(ErrorCode::InvalidSides, "sides admit no spherical triangle");
  q = std::clamp(q, -1.0, 1.0);
  return 2.0 * std::acos(q) / p.t();
}

Triangle build_right_triangle(Param p, double x, double y) {
  if (x == 0.0 || y == 0.0) fail(ErrorCode::DegenerateTriangle, "legs must be nonzero");
  return Triangle::make(normalize_point(p, {0.0, 0.0, 1.0}), normalize_point(p, {x, 0.0, 1.0}),
                        normalize_point(p, {0.0, y, 1.0}));
}

Triangle right_triangle_from_legs(Param p, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(ErrorCode::InvalidSides, "legs must be positive");
  if (p.t() > 0.0 && p.sqrt_abs() * std::max(a, b) >= kPi / 2.0)
    fail(ErrorCode::InvalidSides, "legs must be shorter than pi / (2 sqrt t)");
  const ModelPoint c = normalize_point(p, {0.0, 0.0, 1.0});
  const ModelPoint va = geodesic_point(c, {1.0, 0.0, 0.0}, b);
  const ModelPoint vb = geodesic_point(c, {0.0, 1.0, 0.0}, a);
  return Triangle::make(va, vb, c);
}

double heron_area(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const auto [x, y, z] = s;
  const double k = z - (x - y);
  if (k <= 0.0) return 0.0;
  return 0.25 * std::sqrt((x + (y + z)) * k * (z + (x - y)) * (x + (y - z)));
}

double curvature_estimate(const Triangle& tri) {
  const TriangleMeasurements m = measure(tri);
  return (m.angle_sum() - kPi) / heron_area(m.a, m.b, m.c);
}

}  // namespace transgeo
