#include <doctest.h>

#include <cmath>
#include <numbers>

#include "near.hpp"
#include "oracles.hpp"
#include "transgeo/error.hpp"
#include "transgeo/group.hpp"
#include "transgeo/metric.hpp"

using namespace transgeo;
using std::numbers::pi;

namespace {

ModelPoint pt(double t, Vec3 v) { return normalize_point(Param(t), v); }

}  // namespace

TEST_CASE("angular_distance examples") {
  CHECK_NEAR(angular_distance(pt(1, {0, 0, 1}), pt(1, {1, 0, 0})), pi / 2, 1e-15);
  CHECK_NEAR(angular_distance(pt(1, {0, 0, 1}), pt(1, {1, 0, 1})), pi / 4, 1e-15);
  CHECK_NEAR(angular_distance(pt(-1, {0, 0, 1}), pt(-1, {0.6, 0, 1})), std::log(2.0), 1e-15);
  CHECK_CODE(angular_distance(pt(0, {0, 0, 1}), pt(0, {1, 0, 1})), ZeroParam);
}

TEST_CASE("distance examples") {
  for (double x : {-3.0, 0.25, 2.0}) CHECK_NEAR(distance(pt(0, {0, 0, 1}), pt(0, {x, 0, 1})), std::fabs(x), 1e-15);
  CHECK_NEAR(distance(pt(1, {0, 0, 1}), pt(1, {1, 0, 1})), pi / 4, 1e-15);
  CHECK_NEAR(distance(pt(1e-8, {0, 0, 1}), pt(1e-8, {1, 0, 1})), 1.0 - 1e-8 / 3.0, 1e-12);
  CHECK_NEAR(distance(pt(0, {0, 0, 1}), pt(0, {3, 4, 1})), 5.0, 1e-15);
  sample::Rng rng(10);
  for (double t : {-1.0, 0.0, 1.0}) {
    const ModelPoint x = sample::point(t, rng);
    CHECK(distance(x, x) == 0.0);
  }
  CHECK_CODE(distance(pt(0.5, {0, 0, 1}), pt(0.25, {0, 0, 1})), MixedParam);
}

TEST_CASE("distance agrees with the rescaled-model oracle") {
  sample::Rng rng(11);
  for (double t : {-1.0, -0.5, -1e-4, 0.0, 1e-4, 0.5, 1.0}) {
    for (int i = 0; i < 200; ++i) {
      const Vec3 u = sample::ray(t, rng, 2.0);
      const Vec3 v = sample::ray(t, rng, 2.0);
      const double d = distance(pt(t, u), pt(t, v));
      CHECK_NEAR(d, oracle::distance(t, u, v), 1e-12 * std::max(1.0, d));
      CHECK(d == distance(pt(t, v), pt(t, u)));
    }
  }
}

TEST_CASE("distance of the apex rays matches the closed form") {
  for (double t : {-1.0, -0.3, -1e-6, 0.0, 1e-6, 0.3, 1.0})
    for (double x : {0.1, 0.5, 0.9}) CHECK_NEAR(distance(pt(t, {0, 0, 1}), pt(t, {x, 0, 1})), oracle::ray_distance(t, x), 1e-14);
}

TEST_CASE("distance is a metric") {
  sample::Rng rng(12);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ModelPoint a = sample::point(t, rng, 3.0);
      const ModelPoint b = sample::point(t, rng, 3.0);
      const ModelPoint c = sample::point(t, rng, 3.0);
      worst = std::max(worst, distance(a, c) - distance(a, b) - distance(b, c));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("elliptic distance never exceeds the quotient diameter") {
  sample::Rng rng(13);
  for (double t : {0.25, 1.0}) {
    const Param p(t);
    for (int i = 0; i < 300; ++i) {
      const Vec3 u{sample::uniform(rng, -1, 1), sample::uniform(rng, -1, 1), sample::uniform(rng, -1, 1)};
      const Vec3 v{sample::uniform(rng, -1, 1), sample::uniform(rng, -1, 1), sample::uniform(rng, -1, 1)};
      CHECK(distance(normalize_point(p, u), normalize_point(p, v)) <= pi / (2 * std::sqrt(t)) + 1e-12);
    }
  }
}

TEST_CASE("distance is continuous at t = 0 at first order") {
  for (double x : {0.5, 1.0, 2.0}) {
    for (int k = 2; k <= 8; ++k) {
      for (double sgn : {-1.0, 1.0}) {
        const double t = sgn * std::pow(10.0, -k);
        if (1 + t * x * x <= 0.0) continue;
        const double dev = std::fabs(distance(pt(t, {0, 0, 1}), pt(t, {x, 0, 1})) - x);
        CHECK(dev <= std::fabs(t) * x * x * x / 3.0 * (1 + 10 * std::fabs(t) * x * x) + 1e-15);
      }
    }
  }
}

TEST_CASE("geodesic_point examples") {
  const Vec3 a = geodesic_point(pt(1, {0, 0, 1}), {1, 0, 0}, pi / 2).rep();
  CHECK(max_abs(a - Vec3{1, 0, 0}) <= 1e-15);
  for (double s : {-2.0, 0.5, 3.0}) {
    const Vec3 b = geodesic_point(pt(0, {0, 0, 1}), {1, 0, 0}, s).rep();
    CHECK(max_abs(b - Vec3{s, 0, 1}) <= 1e-15);
  }
  const Vec3 c = geodesic_point(pt(-1, {0, 0, 1}), {1, 0, 0}, std::log(2.0)).rep();
  CHECK(max_abs(c - Vec3{0.75, 0, 1.25}) <= 1e-15);
  CHECK_CODE(geodesic_point(pt(1, {0, 0, 1}), {2, 0, 0}, 1.0), NotUnitTangent);
  CHECK_CODE(geodesic_point(pt(1, {0, 0, 1}), {1, 0, 0.1}, 1.0), NotUnitTangent);
}

TEST_CASE("geodesics realize distance") {
  sample::Rng rng(14);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const double smax = t > 0 ? pi / (2 * std::sqrt(t)) : 4.0;
    for (int i = 0; i < 200; ++i) {
      const ModelPoint a = sample::point(t, rng);
      const ModelPoint b = sample::point(t, rng);
      const Vec3 u = unit_tangent_toward(a, b);
      CHECK_NEAR(tangent_metric(a, u, u), 1.0, 1e-12);
      const double s = sample::uniform(rng, 0.0, smax);
      CHECK_NEAR(distance(a, geodesic_point(a, u, s)), s, 1e-9);
      // the geodesic toward b passes through b
      CHECK(same_point(geodesic_point(a, u, distance(a, b)), b, 1e-10));
    }
  }
}

TEST_CASE("elliptic geodesics are periodic") {
  const double t = 0.25;
  const ModelPoint o = pt(t, {0.3, -0.2, 1});
  const Vec3 u = unit_tangent_toward(o, pt(t, {1, 1, 1}));
  const double period = 2 * pi / std::sqrt(t);
  for (double s : {0.4, 1.7, 3.1}) {
    const ModelPoint a = geodesic_point(o, u, s);
    const ModelPoint b = geodesic_point(o, u, s + period);
    CHECK(same_point(a, b, 1e-12));
    // distance folds back after half a period in the quotient
    const double folded = std::fmod(s, period / 2);
    CHECK_NEAR(distance(o, a), std::min(folded, period / 2 - folded), 1e-10);
  }
}

TEST_CASE("line_through and on_line examples") {
  const Line eq = line_through(pt(1, {1, 0, 0}), pt(1, {0, 1, 0}));
  CHECK(max_abs(eq.normal() - Vec3{0, 0, 1}) <= 1e-15);
  CHECK(on_line(eq, pt(1, {1, 0, 0})));
  CHECK_FALSE(on_line(eq, pt(1, {0, 0, 1})));

  const Line xaxis = line_through(pt(0, {0, 0, 1}), pt(0, {1, 0, 1}));
  CHECK(on_line(xaxis, pt(0, {-7, 0, 1})));
  CHECK_FALSE(on_line(xaxis, pt(0, {0, 0.1, 1})));
  CHECK_NEAR(std::fabs(xaxis.normal().y), 1.0, 1e-15);

  const Line y0 = line_through(pt(-1, {0, 0, 1}), pt(-1, {0.75, 0, 1.25}));
  const ModelPoint o = pt(-1, {0, 0, 1});
  for (double s : {-3.0, -0.5, 0.0, 1.0, 5.0}) CHECK(on_line(y0, geodesic_point(o, {1, 0, 0}, s)));
  CHECK_FALSE(on_line(y0, pt(-1, {0, 0.5, 1})));

  CHECK_CODE(line_through(o, o), CoincidentPoints);
}

TEST_CASE("lines through random pairs contain both points") {
  sample::Rng rng(15);
  for (double t : {-1.0, -0.4, 0.0, 0.4, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const ModelPoint a = sample::point(t, rng);
      const ModelPoint b = sample::point(t, rng);
      const Line l = line_through(a, b);
      CHECK(on_line(l, a, 1e-12));
      CHECK(on_line(l, b, 1e-12));
      if (t > 0) CHECK_NEAR(quad_form(Param(t), l.normal()), 1.0, 1e-12);
      if (t < 0) CHECK_NEAR(quad_form(Param(t), l.normal()), -1.0, 1e-12);
    }
  }
}

TEST_CASE("intersect") {
  sample::Rng rng(16);
  for (double t : {-1.0, 0.0, 1.0}) {
    for (int i = 0; i < 50; ++i) {
      const ModelPoint c = sample::point(t, rng, 0.5);
      const Line l1 = line_through(c, sample::point(t, rng));
      const Line l2 = line_through(c, sample::point(t, rng));
      CHECK(same_point(intersect(l1, l2), c, 1e-10));
    }
  }
  const Line l = line_through(pt(0, {0, 0, 1}), pt(0, {1, 0, 1}));
  CHECK_CODE(intersect(l, l), CoincidentLines);
  const Line par = line_through(pt(0, {0, 1, 1}), pt(0, {1, 1, 1}));
  CHECK_CODE(intersect(l, par), OutsideCone);
  // ultraparallel hyperbolic lines x = 0.5 and x = -0.5 in the Klein chart
  const Line h1 = line_through(pt(-1, {0.5, 0, 1}), pt(-1, {0.5, 0.5, 1}));
  const Line h2 = line_through(pt(-1, {-0.5, 0, 1}), pt(-1, {-0.5, 0.5, 1}));
  CHECK_CODE(intersect(h1, h2), OutsideCone);
}

TEST_CASE("angle examples") {
  CHECK_NEAR(angle(pt(1, {0, 0, 1}), pt(1, {1, 0, 0}), pt(1, {0, 1, 0})), pi / 2, 1e-15);
  CHECK_NEAR(angle(pt(0, {0, 0, 1}), pt(0, {1, 0, 1}), pt(0, {1, 1, 1})), pi / 4, 1e-15);
  CHECK_NEAR(angle(pt(-1, {0, 0, 1}), pt(-1, {0.6, 0, 1}), pt(-1, {0, 0.6, 1})), pi / 2, 1e-15);
  CHECK_NEAR(angle(pt(0, {0, 0, 1}), pt(0, {1, 0, 1}), pt(0, {-1, 0, 1})), pi, 1e-15);
  CHECK_CODE(angle(pt(1, {0, 0, 1}), pt(1, {0, 0, 2}), pt(1, {1, 0, 0})), CoincidentWithVertex);
}

TEST_CASE("angle symmetry, arc invariance and the oracle") {
  sample::Rng rng(17);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const Vec3 v = sample::ray(t, rng), a = sample::ray(t, rng), b = sample::ray(t, rng);
      const ModelPoint V = pt(t, v), A = pt(t, a), B = pt(t, b);
      const double ang = angle(V, A, B);
      CHECK(ang >= 0.0);
      CHECK(ang <= pi);
      CHECK(ang == angle(V, B, A));
      INFO("t = " << t);
      CHECK_NEAR(ang, oracle::angle(t, v, a, b), 1e-10);
      const Vec3 u = unit_tangent_toward(V, A);
      const ModelPoint A2 = geodesic_point(V, u, 0.3 * distance(V, A));
      CHECK_NEAR(angle(V, A2, B), ang, 1e-10);
    }
  }
}

TEST_CASE("pole examples") {
  const Line eq = line_through(pt(1, {1, 0, 0}), pt(1, {0, 1, 0}));
  CHECK(max_abs(pole(eq).rep() - Vec3{0, 0, 1}) <= 1e-15);
  const Line y0 = line_through(pt(1, {1, 0, 0}), pt(1, {0, 0, 1}));
  CHECK(max_abs(pole(y0).rep() - Vec3{0, 1, 0}) <= 1e-15);
  const Line h = line_through(pt(-1, {0, 0, 1}), pt(-1, {0.5, 0, 1}));
  CHECK_CODE(pole(h), NonPositiveParam);
  CHECK_CODE(equator(pt(0, {0, 0, 1})), NonPositiveParam);
  CHECK_CODE(perpendicular(h, h), NonPositiveParam);
}

TEST_CASE("pole-equator distance") {
  sample::Rng rng(18);
  for (double t : {0.25, 1.0}) {
    for (int i = 0; i < 50; ++i) {
      const ModelPoint a = sample::point(t, rng);
      const ModelPoint b = sample::point(t, rng);
      const Line l = line_through(a, b);
      const ModelPoint n = pole(l);
      CHECK_FALSE(on_line(l, n));
      const Vec3 u = unit_tangent_toward(a, b);
      for (double s : {0.0, 0.7, 2.0, 5.0}) {
        const ModelPoint x = geodesic_point(a, u, s);
        REQUIRE(on_line(l, x, 1e-12));
        CHECK_NEAR(distance(n, x), pi / (2 * std::sqrt(t)), 1e-10);
      }
    }
  }
}

TEST_CASE("equator examples and duality") {
  const Line e = equator(pt(1, {0, 0, 1}));
  CHECK(max_abs(e.normal() - Vec3{0, 0, 1}) <= 1e-15);
  sample::Rng rng(19);
  for (double t : {0.25, 1.0}) {
    const Param p(t);
    for (int i = 0; i < 100; ++i) {
      const Vec3 v{sample::uniform(rng, -1, 1), sample::uniform(rng, -1, 1), sample::uniform(rng, -1, 1)};
      const ModelPoint x = normalize_point(p, v);
      CHECK(max_abs(pole(equator(x)).rep() - x.rep()) <= 1e-12);
      // points of the equator have involutions fixing x
      const Line l = equator(x);
      const ModelPoint q = intersect(l, line_through(x, sample::point(t, rng)));
      CHECK(on_line(l, q, 1e-12));
      const Vec3 image = canonical_sign(involution(q).apply(x.rep()));
      CHECK(max_abs(image - x.rep()) <= 1e-10);
    }
  }
}

TEST_CASE("perpendicular examples and symmetry") {
  const auto plane = [](Vec3 e) { return Line::from_covector(Param(1), e); };
  CHECK(perpendicular(plane({1, 0, 0}), plane({0, 1, 0})));
  CHECK(perpendicular(plane({0, 0, 1}), plane({0, 1, 0})));
  CHECK_FALSE(perpendicular(plane({0, 1, 0}), plane({1, -1, 0})));

  sample::Rng rng(20);
  for (double t : {0.25, 1.0}) {
    int perpendicular_pairs = 0;
    for (int i = 0; i < 100; ++i) {
      const ModelPoint a = sample::point(t, rng);
      const Line l1 = line_through(a, sample::point(t, rng));
      // half of the pairs are made perpendicular by passing through the pole
      const Line l2 = i % 2 == 0 ? line_through(a, pole(l1)) : line_through(a, sample::point(t, rng));
      CHECK(perpendicular(l1, l2) == perpendicular(l2, l1));
      perpendicular_pairs += perpendicular(l1, l2) ? 1 : 0;
    }
    CHECK(perpendicular_pairs == 50);
  }
}

TEST_CASE("line from covector at t = 0") {
  const Line l = Line::from_covector(Param(0), {3, 4, -10});
  CHECK_NEAR(l.normal().x * l.normal().x + l.normal().y * l.normal().y, 1.0, 1e-15);
  CHECK(on_line(l, pt(0, {2, 1, 1})));
  CHECK_CODE(Line::from_covector(Param(0), {0, 0, 1}), OutsideCone);
  CHECK_CODE(Line::from_covector(Param(-1), {0, 0, 1}), OutsideCone);
  CHECK_CODE(Line::from_covector(Param(1), {0, 0, 0}), InvalidArgument);
}

TEST_CASE("bisector concurrency examples") {
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const Param p(t);
    const double r = 0.5;
    std::array<ModelPoint, 3> eq{normalize_point(p, {r, 0, 1}),
                                 normalize_point(p, {r * std::cos(2 * pi / 3), r * std::sin(2 * pi / 3), 1}),
                                 normalize_point(p, {r * std::cos(4 * pi / 3), r * std::sin(4 * pi / 3), 1})};
    CHECK(angle_bisector_spread(eq) <= 1e-9);
  }
  sample::Rng rng(21);
  for (int i = 0; i < 50; ++i) CHECK(angle_bisector_spread(sample::triangle(0, rng).vertices()) <= 1e-9);
  for (double t : {-0.5, 0.5})
    for (int i = 0; i < 50; ++i) CHECK(angle_bisector_spread(sample::triangle(t, rng).vertices()) <= 1e-8);
  const Param p(0.5);
  CHECK_CODE(angle_bisector_spread({normalize_point(p, {0, 0, 1}), normalize_point(p, {1, 0, 1}),
                                    normalize_point(p, {2, 0, 1})}),
             DegenerateTriangle);
}

TEST_CASE("distance is invariant under isometries") {
  sample::Rng rng(22);
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const Param p(t);
    for (int i = 0; i < 100; ++i) {
      const Isometry m = coherent_translation(sample::uniform(rng, -1, 1), p) *
                         stabilizer_rotation(sample::point(t, rng), sample::uniform(rng, 0, 6));
      const ModelPoint a = sample::point(t, rng);
      const ModelPoint b = sample::point(t, rng);
      CHECK_NEAR(distance(m.apply(a), m.apply(b)), distance(a, b), 1e-10);
    }
  }
}
