#include "transgeo/metric.hpp"

#include <algorithm>
#include <cmath>

#include "transgeo/error.hpp"

namespace transgeo {

namespace {

constexpr double kParallelTolerance = 1e-12;

void require_same_param(const ModelPoint& a, const ModelPoint& b) {
  if (!(a.param() == b.param())) fail(ErrorCode::MixedParam, "points belong to different E_t");
}

void require_elliptic(Param p) {
  if (p.t() <= 0.0) fail(ErrorCode::NonPositiveParam, "polarity is defined for t > 0 only");
}

// Representative of `p` on the same side of the beta-hyperplane of `base`; this
// picks the minor arc in the elliptic quotient and is the identity for t <= 0.
Vec3 facing_rep(const ModelPoint& base, const ModelPoint& p) {
  const Vec3& r = p.rep();
  return bilinear_form(base.param(), r, base.rep()) < 0.0 ? -r : r;
}

}  // namespace

Line Line::from_covector(Param p, const Vec3& e) {
  if (!e.is_finite() || max_abs(e) == 0.0) fail(ErrorCode::InvalidArgument, "degenerate plane");
  const double t = p.t();
  Vec3 n;
  if (t == 0.0) {
    const double h = std::hypot(e.x, e.y);
    if (h == 0.0) fail(ErrorCode::OutsideCone, "plane z = 0 is the line at infinity");
    n = e / h;
  } else {
    n = {e.x / t, e.y / t, e.z};
    const double q = quad_form(p, n);
    if (t > 0.0) {
      n = n / std::sqrt(q);
    } else {
      if (!(q < 0.0)) fail(ErrorCode::OutsideCone, "plane does not meet the hyperboloid");
      n = n / std::sqrt(-q);
    }
  }
  return Line(p, canonical_sign(n));
}

Vec3 Line::covector() const {
  const double t = param_.t();
  if (t == 0.0) return normal_;
  return {t * normal_.x, t * normal_.y, normal_.z};
}

double angular_distance(const ModelPoint& a, const ModelPoint& b) {
  require_same_param(a, b);
  const Param p = a.param();
  if (p.t() == 0.0) fail(ErrorCode::ZeroParam, "angular distance is undefined at t = 0");
  const double beta = bilinear_form(p, a.rep(), b.rep());
  if (p.t() > 0.0) return std::acos(std::min(1.0, std::fabs(beta)));
  return std::acosh(std::max(1.0, beta));
}

double distance(const ModelPoint& a, const ModelPoint& b) {
  require_same_param(a, b);
  const Param p = a.param();
  const double t = p.t();
  const Vec3& u = a.rep();
  const Vec3& v = b.rep();
  // beta^2 - q(u) q(v) = -t (Cxz^2 + Cyz^2 + t Cxy^2), so with q = 1 the sine
  // (or sinh) of the angular distance is sqrt(|t| m) without cancellation.
  const double cxy = u.x * v.y - u.y * v.x;
  const double cxz = u.x * v.z - u.z * v.x;
  const double cyz = u.y * v.z - u.z * v.y;
  const double m = std::max(0.0, cxz * cxz + cyz * cyz + t * cxy * cxy);
  if (t == 0.0) return std::sqrt(m);
  const double r = std::sqrt(std::fabs(t));
  const double beta = bilinear_form(p, u, v);
  if (t > 0.0) return std::atan2(std::sqrt(t * m), std::fabs(beta)) / r;
  if (beta < 1.5) return std::asinh(std::sqrt(-t * m)) / r;
  return std::acosh(beta) / r;
}

Vec3 tangent_toward(const ModelPoint& from, const ModelPoint& to) {
  require_same_param(from, to);
  const Vec3 target = facing_rep(from, to);
  return target - from.rep() * bilinear_form(from.param(), target, from.rep());
}

Vec3 unit_tangent_toward(const ModelPoint& from, const ModelPoint& to) {
  if (same_point(from, to)) fail(ErrorCode::CoincidentPoints, "no direction between equal points");
  const Vec3 u = tangent_toward(from, to);
  return u / std::sqrt(tangent_pairing(from.param(), u, u));
}

ModelPoint geodesic_point(const ModelPoint& start, const Vec3& dir, double s) {
  const Param p = start.param();
  if (!dir.is_finite() || !std::isfinite(s)) fail(ErrorCode::InvalidArgument, "non-finite input");
  if (std::fabs(bilinear_form(p, dir, start.rep())) > kTangencyTolerance ||
      std::fabs(tangent_pairing(p, dir, dir) - 1.0) > kTangencyTolerance)
    fail(ErrorCode::NotUnitTangent, "direction must be a unit tangent at the start point");
  return normalize_point(p, start.rep() * gen_cos(p, s) + dir * gen_sin(p, s));
}

Line line_through(const ModelPoint& a, const ModelPoint& b) {
  require_same_param(a, b);
  const Vec3 e = cross(a.rep(), b.rep());
  if (norm(e) <= kParallelTolerance * norm(a.rep()) * norm(b.rep()))
    fail(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  return Line::from_covector(a.param(), e);
}

bool on_line(const Line& line, const ModelPoint& p, double tol) {
  if (!(line.param() == p.param())) fail(ErrorCode::MixedParam, "line and point differ in t");
  return std::fabs(dot(line.covector(), p.rep())) <= tol;
}

ModelPoint intersect(const Line& l1, const Line& l2) {
  if (!(l1.param() == l2.param())) fail(ErrorCode::MixedParam, "lines differ in t");
  const Vec3 c1 = l1.covector();
  const Vec3 c2 = l2.covector();
  const Vec3 v = cross(c1, c2);
  if (norm(v) <= kParallelTolerance * norm(c1) * norm(c2))
    fail(ErrorCode::CoincidentLines, "lines coincide");
  try {
    return normalize_point(l1.param(), v);
  } catch (const GeometryError&) {
    fail(ErrorCode::OutsideCone, "lines do not meet in E_t");
  }
}

double angle(const ModelPoint& vertex, const ModelPoint& p, const ModelPoint& q) {
  require_same_param(vertex, p);
  require_same_param(vertex, q);
  if (same_point(vertex, p) || same_point(vertex, q))
    fail(ErrorCode::CoincidentWithVertex, "angle sides must leave the vertex");
  const Param par = vertex.param();
  const Vec3 pp = facing_rep(vertex, p);
  const Vec3 qq = facing_rep(vertex, q);
  const Vec3& v = vertex.rep();
  const Vec3 u = pp - v * bilinear_form(par, pp, v);
  const Vec3 w = qq - v * bilinear_form(par, qq, v);
  // In the tangent metric, |u||w| sin(angle) = |det[v, u, w]| = |det[v, pp, qq]|.
  return std::atan2(std::fabs(triple(v, pp, qq)), tangent_pairing(par, u, w));
}

ModelPoint pole(const Line& line) {
  require_elliptic(line.param());
  return normalize_point(line.param(), line.normal());
}

Line equator(const ModelPoint& p) {
  require_elliptic(p.param());
  return Line::from_covector(p.param(), gram(p.param()) * p.rep());
}

bool perpendicular(const Line& l1, const Line& l2, double tol) {
  require_elliptic(l1.param());
  return on_line(l2, pole(l1), tol);
}

double angle_bisector_spread(const std::array<ModelPoint, 3>& vs) {
  const Param p = vs[0].param();
  require_same_param(vs[0], vs[1]);
  require_same_param(vs[0], vs[2]);
  if (std::fabs(triple(vs[0].rep(), vs[1].rep(), vs[2].rep())) <= 1e-10)
    fail(ErrorCode::DegenerateTriangle, "vertices are collinear");

  const auto bisector = [&](std::size_t i) {
    const ModelPoint& v = vs[i];
    const Vec3 b = unit_tangent_toward(v, vs[(i + 1) % 3]) + unit_tangent_toward(v, vs[(i + 2) % 3]);
    return Line::from_covector(p, cross(v.rep(), b));
  };
  const std::array<Line, 3> bisectors{bisector(0), bisector(1), bisector(2)};
  const ModelPoint i01 = intersect(bisectors[0], bisectors[1]);
  const ModelPoint i12 = intersect(bisectors[1], bisectors[2]);
  const ModelPoint i20 = intersect(bisectors[2], bisectors[0]);
  return std::max({distance(i01, i12), distance(i12, i20), distance(i20, i01)});
}

}  // namespace transgeo
