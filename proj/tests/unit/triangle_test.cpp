#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "near.hpp"
#include "oracles.hpp"
#include "transgeo/error.hpp"
#include "transgeo/group.hpp"
#include "transgeo/metric.hpp"
#include "transgeo/triangle.hpp"

using namespace transgeo;
using std::numbers::pi;

namespace {

ModelPoint pt(double t, Vec3 v) { return normalize_point(Param(t), v); }

Triangle tri(double t, Vec3 a, Vec3 b, Vec3 c) { return Triangle::make(pt(t, a), pt(t, b), pt(t, c)); }

double max_of(const std::array<double, 6>& r) { return *std::max_element(r.begin(), r.end()); }

}  // namespace

TEST_CASE("triangle construction errors") {
  CHECK_CODE(tri(0, {0, 0, 1}, {0, 0, 2}, {1, 0, 1}), DegenerateTriangle);
  CHECK_CODE(tri(0, {0, 0, 1}, {1, 1, 1}, {2, 2, 1}), DegenerateTriangle);
  CHECK_CODE(tri(1, {1, 0, 0}, {0, 1, 0}, {-1, 1, 0}), DegenerateTriangle);
  CHECK_CODE(Triangle::make(pt(0.5, {0, 0, 1}), pt(0.5, {1, 0, 1}), pt(0.25, {0, 1, 1})), MixedParam);
  // minor arcs of these three elliptic points do not bound one triangle
  CHECK_CODE(tri(1, {1, 0, 0.1}, {-0.5, 0.87, 0.1}, {-0.5, -0.87, 0.1}), DegenerateTriangle);
  CHECK_CODE(build_right_triangle(Param(0.5), 0.0, 1.0), DegenerateTriangle);
  CHECK_CODE(build_right_triangle(Param(-1), 1.0, 0.5), OutsideCone);
}

TEST_CASE("measure: octant triangle") {
  const TriangleMeasurements m = measure(tri(1, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}));
  for (double s : {m.a, m.b, m.c, m.A, m.B, m.C}) CHECK_NEAR(s, pi / 2, 1e-15);
  CHECK_NEAR(m.area, pi / 2, 1e-15);
  CHECK(m.t == 1.0);
}

TEST_CASE("measure: Euclidean 3-4-5") {
  const TriangleMeasurements m = measure(tri(0, {0, 0, 1}, {3, 0, 1}, {0, 4, 1}));
  CHECK_NEAR(m.a, 5.0, 1e-15);
  CHECK_NEAR(m.b, 4.0, 1e-15);
  CHECK_NEAR(m.c, 3.0, 1e-15);
  CHECK_NEAR(m.A, pi / 2, 1e-15);
  CHECK_NEAR(m.B, std::atan2(4.0, 3.0), 1e-15);
  CHECK_NEAR(m.C, std::atan2(3.0, 4.0), 1e-15);
  CHECK_NEAR(m.area, 6.0, 1e-15);
  CHECK_NEAR(m.angle_sum(), pi, 1e-15);
}

TEST_CASE("measure: coherent right triangle against the closed forms") {
  for (double t : {-1.0, -0.5, -1e-6, 0.0, 1e-6, 0.5, 1.0}) {
    for (auto [x, y] : {std::pair{0.5, 0.7}, {0.9, 0.3}, {0.2, 0.2}}) {
      const TriangleMeasurements m = measure(build_right_triangle(Param(t), x, y));
      CHECK_NEAR(m.c, oracle::ray_distance(t, x), 1e-10);
      CHECK_NEAR(m.b, oracle::ray_distance(t, y), 1e-10);
      CHECK_NEAR(m.a, oracle::hypotenuse(t, x, y), 1e-10);
      CHECK_NEAR(m.A, pi / 2, 1e-12);
    }
  }
}

TEST_CASE("measure: sides, angles and area against the oracles") {
  sample::Rng rng(40);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const Vec3 a = sample::ray(t, rng), b = sample::ray(t, rng), c = sample::ray(t, rng);
      std::optional<Triangle> T;
      try {
        T = tri(t, a, b, c);
      } catch (const GeometryError&) {
        continue;
      }
      const TriangleMeasurements m = measure(*T);
      CHECK_NEAR(m.a, oracle::distance(t, b, c), 1e-12);
      CHECK_NEAR(m.A, oracle::angle(t, a, b, c), 1e-10);
      CHECK_NEAR(m.B, oracle::angle(t, b, c, a), 1e-10);
      CHECK_NEAR(m.area, oracle::area_from_sides(t, m.a, m.b, m.c), 1e-9);
      if (t > 0) CHECK(m.angle_sum() > pi);
      if (t < 0) CHECK(m.angle_sum() < pi);
      if (t == 0) CHECK_NEAR(m.angle_sum(), pi, 1e-9);
    }
  }
}

TEST_CASE("measurements are isometry invariant") {
  sample::Rng rng(41);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const Param p(t);
    for (int i = 0; i < 50; ++i) {
      const Triangle T = sample::triangle(t, rng);
      const Isometry m = coherent_translation(sample::uniform(rng, -1, 1), p) *
                         stabilizer_rotation(sample::point(t, rng), sample::uniform(rng, 0, 6));
      const TriangleMeasurements u = measure(T);
      const TriangleMeasurements v =
          measure(Triangle::make(m.apply(T.A()), m.apply(T.B()), m.apply(T.C())));
      for (auto [x, y] : {std::pair{u.a, v.a}, {u.b, v.b}, {u.c, v.c}, {u.A, v.A}, {u.B, v.B}, {u.C, v.C}, {u.area, v.area}})
        CHECK_NEAR(x, y, 1e-9);
    }
  }
}

TEST_CASE("pythagoras_check examples") {
  // t = 1, legs pi/3: cos c = 1/4
  const Triangle s = right_triangle_from_legs(Param(1), pi / 3, pi / 3);
  CHECK_NEAR(measure(s).c, std::acos(0.25), 1e-12);
  CHECK(pythagoras_check(s) <= 1e-12);

  const Triangle e = tri(0, {3, 0, 1}, {0, 4, 1}, {0, 0, 1});
  CHECK(pythagoras_check(e) <= 1e-12);

  const Triangle h = right_triangle_from_legs(Param(-1), std::log(2.0), std::log(2.0));
  CHECK_NEAR(std::cosh(measure(h).c), 1.25 * 1.25, 1e-12);
  CHECK(pythagoras_check(h) <= 1e-12);

  CHECK_CODE(pythagoras_check(tri(0, {0, 0, 1}, {3, 0, 1}, {0, 4, 1})), NoRightAngle);
  CHECK_CODE(with_right_angle_at_c(tri(0.5, {0, 0, 1}, {1, 0, 1}, {0.5, 1, 1})), NoRightAngle);
}

TEST_CASE("with_right_angle_at_c relabels cyclically") {
  for (double t : {-0.5, 0.0, 0.5}) {
    const Triangle T = with_right_angle_at_c(build_right_triangle(Param(t), 0.6, 0.8));
    CHECK(T.C().rep() == pt(t, {0, 0, 1}).rep());
    CHECK(pythagoras_check(T) <= 1e-12);
  }
}

TEST_CASE("right-triangle table") {
  CHECK(max_of(right_triangle_table_check(tri(0, {3, 0, 1}, {0, 4, 1}, {0, 0, 1}))) <= 1e-12);
  CHECK(max_of(right_triangle_table_check(right_triangle_from_legs(Param(1), pi / 3, pi / 3))) <= 1e-10);
  sample::Rng rng(42);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const double lmax = t > 0 ? 1.4 / std::sqrt(t) : 2.5;
    for (int i = 0; i < 50; ++i) {
      const Triangle T = right_triangle_from_legs(Param(t), sample::uniform(rng, 0.05, lmax),
                                                  sample::uniform(rng, 0.05, lmax));
      CHECK(max_of(right_triangle_table_check(T)) <= 1e-10);
    }
  }
  CHECK_CODE(right_triangle_table_check(tri(0.5, {0, 0, 1}, {1, 0, 1}, {1, 1, 1})), NoRightAngle);
}

TEST_CASE("the table holds through t = 0 for a fixed configuration") {
  for (int i = 0; i <= 40; ++i) {
    const double t = -1.0 + 0.05 * i;
    const Triangle T = with_right_angle_at_c(build_right_triangle(Param(t), 0.8, 0.6));
    CHECK(max_of(right_triangle_table_check(T)) <= 1e-8);
  }
}

TEST_CASE("sine rule") {
  for (double t : {-1.0, 0.0, 1.0}) {
    const double r = 0.4;
    const Triangle eq = tri(t, {r, 0, 1}, {r * std::cos(2 * pi / 3), r * std::sin(2 * pi / 3), 1},
                            {r * std::cos(4 * pi / 3), r * std::sin(4 * pi / 3), 1});
    const auto q = sine_rule_ratios(eq);
    CHECK_NEAR(q[0], q[1], 1e-13);
    CHECK_NEAR(q[1], q[2], 1e-13);
  }
  for (double v : sine_rule_ratios(tri(0, {0, 0, 1}, {3, 0, 1}, {0, 4, 1}))) CHECK_NEAR(v, 5.0, 1e-13);
  for (double v : sine_rule_ratios(tri(1, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}))) CHECK_NEAR(v, 1.0, 1e-15);

  sample::Rng rng(43);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const auto q = sine_rule_ratios(sample::triangle(t, rng));
      CHECK(*std::max_element(q.begin(), q.end()) - *std::min_element(q.begin(), q.end()) <= 1e-10);
    }
  }
}

TEST_CASE("Euler area examples") {
  CHECK_NEAR(area_euler(Param(1), pi / 2, pi / 2, pi / 2), pi / 2, 1e-12);
  double prev = area_euler(Param(1), 1.0, 1.0, 0.5);
  for (double c : {0.1, 1e-3, 1e-6}) {
    const double a = area_euler(Param(1), 1.0, 1.0, c);
    CHECK(a < prev);
    prev = a;
  }
  CHECK(prev < 1e-5);
  const Triangle small = build_right_triangle(Param(1e-4), 1.0, 1.0);
  const TriangleMeasurements m = measure(small);
  CHECK_NEAR(area_euler(Param(1e-4), m.a, m.b, m.c), 0.5, 1e-3);
}

TEST_CASE("Euler area agrees with the excess") {
  sample::Rng rng(44);
  for (double t : {0.25, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const TriangleMeasurements m = measure(sample::triangle(t, rng, 2.0));
      CHECK_NEAR(area_euler(Param(t), m.a, m.b, m.c), m.area, 1e-9);
    }
  }
}

TEST_CASE("Euler area errors") {
  CHECK_CODE(area_euler(Param(0), 1, 1, 1), NonPositiveParam);
  CHECK_CODE(area_euler(Param(-0.5), 1, 1, 1), NonPositiveParam);
  CHECK_CODE(area_euler(Param(1), 1, 1, 3), InvalidSides);
  CHECK_CODE(area_euler(Param(1), -1, 1, 1), InvalidSides);
  CHECK_CODE(area_euler(Param(1), 3.2, 3.2, 3.2), InvalidSides);
}

TEST_CASE("build_right_triangle") {
  for (double t : {-0.5, 0.0, 0.5, 1.0}) {
    const TriangleMeasurements m = measure(build_right_triangle(Param(t), 1.0, 1.0));
    CHECK_NEAR(m.A, pi / 2, 1e-12);
    CHECK_NEAR(m.b, m.c, 1e-15);
    CHECK_NEAR(m.B, m.C, 1e-12);
  }
  const TriangleMeasurements e = measure(build_right_triangle(Param(0), 3.0, 4.0));
  CHECK_NEAR(e.c, 3.0, 1e-15);
  CHECK_NEAR(e.b, 4.0, 1e-15);
  CHECK_NEAR(e.a, 5.0, 1e-15);
  double prev = 0.0;
  for (double x : {1e1, 1e3, 1e6}) {
    const TriangleMeasurements m = measure(build_right_triangle(Param(1), x, x));
    CHECK(m.c > prev);
    prev = m.c;
  }
  CHECK_NEAR(prev, pi / 2, 1e-5);
}

TEST_CASE("right_triangle_from_legs") {
  for (double t : {-1.0, 0.0, 1.0}) {
    const Triangle T = right_triangle_from_legs(Param(t), 0.6, 0.9);
    const TriangleMeasurements m = measure(T);
    CHECK_NEAR(m.a, 0.6, 1e-12);
    CHECK_NEAR(m.b, 0.9, 1e-12);
    CHECK_NEAR(m.C, pi / 2, 1e-12);
  }
  CHECK_CODE(right_triangle_from_legs(Param(1), 1.6, 0.5), InvalidSides);
  CHECK_CODE(right_triangle_from_legs(Param(1), 0.0, 0.5), InvalidSides);
}

TEST_CASE("heron_area") {
  CHECK_NEAR(heron_area(3, 4, 5), 6.0, 1e-15);
  CHECK(heron_area(1, 2, 3) == 0.0);
  CHECK_NEAR(heron_area(1, 1, 1), std::sqrt(3.0) / 4, 1e-16);
}

TEST_CASE("curvature recovery on shrinking triangles") {
  // legs h and 0.8 h leaving a fixed point at a fixed angle
  const auto small = [](double t, double h) {
    const Param p(t);
    const ModelPoint o = normalize_point(p, {0.2, 0.1, 1});
    const Vec3 u = unit_tangent_toward(o, normalize_point(p, {0.6, 0.2, 1}));
    const Vec3 w = unit_tangent_toward(o, normalize_point(p, {0, 0.55, 1}));
    return Triangle::make(o, geodesic_point(o, u, h), geodesic_point(o, w, 0.8 * h));
  };
  for (double t : {-1.0, -0.5, 0.5, 1.0}) {
    const double e1 = std::fabs(curvature_estimate(small(t, 0.1)) - t);
    const double e2 = std::fabs(curvature_estimate(small(t, 0.05)) - t);
    const double e3 = std::fabs(curvature_estimate(small(t, 0.025)) - t);
    CHECK(std::log2(e1 / e2) >= 1.8);
    CHECK(std::log2(e2 / e3) >= 1.8);
  }
  CHECK(std::fabs(curvature_estimate(small(0.0, 0.1))) <= 1e-6);
}
