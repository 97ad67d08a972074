#include "transgeo/form.hpp"

#include <cmath>
#include <string>

#include "transgeo/error.hpp"

namespace transgeo {

namespace {

// Below this |t| s^2 the even power series is used.
constexpr double kSeriesThreshold = 1e-8;

}  // namespace

Param::Param(double t) : t_(t) {
  if (!std::isfinite(t) || std::fabs(t) > 1.0)
    fail(ErrorCode::InvalidParam, "t must lie in [-1, 1], got " + std::to_string(t));
}

Regime Param::regime() const noexcept {
  if (t_ > 0.0) return Regime::Elliptic;
  if (t_ < 0.0) return Regime::Hyperbolic;
  return Regime::Euclidean;
}

double Param::sqrt_abs() const noexcept { return std::sqrt(std::fabs(t_)); }

Mat3 gram(Param p) { return Mat3::diag(p.t(), p.t(), 1.0); }

double quad_form(Param p, const Vec3& v) { return p.t() * (v.x * v.x + v.y * v.y) + v.z * v.z; }

double bilinear_form(Param p, const Vec3& u, const Vec3& v) {
  return p.t() * (u.x * v.x + u.y * v.y) + u.z * v.z;
}

Vec3 canonical_sign(const Vec3& v) {
  if (v.z > 0.0) return v;
  if (v.z < 0.0) return -v;
  if (v.x > 0.0) return v;
  if (v.x < 0.0) return -v;
  return v.y >= 0.0 ? v : -v;
}

ModelPoint normalize_point(Param p, const Vec3& v) {
  if (!v.is_finite()) fail(ErrorCode::InvalidArgument, "non-finite coordinates");
  if (v.x == 0.0 && v.y == 0.0 && v.z == 0.0) fail(ErrorCode::NullVector, "zero vector");
  const double q = quad_form(p, v);
  if (!(q > 0.0)) fail(ErrorCode::OutsideCone, "q_t(v) = " + std::to_string(q) + " <= 0");
  // q > 0 with t <= 0 already forces z != 0.
  return ModelPoint(canonical_sign(v / std::sqrt(q)), p);
}

bool same_point(const ModelPoint& a, const ModelPoint& b, double tol) {
  const Vec3& u = a.rep();
  const Vec3& v = b.rep();
  return norm(cross(u, v)) <= tol * norm(u) * norm(v);
}

double tangent_pairing(Param p, const Vec3& u, const Vec3& v) {
  const double flat = u.x * v.x + u.y * v.y;
  if (p.t() == 0.0) return flat;
  return flat + u.z * v.z / p.t();
}

double tangent_metric(const ModelPoint& at, const Vec3& u, const Vec3& v) {
  const Param p = at.param();
  if (std::fabs(bilinear_form(p, u, at.rep())) > kTangencyTolerance ||
      std::fabs(bilinear_form(p, v, at.rep())) > kTangencyTolerance)
    fail(ErrorCode::NotTangent, "vector is not tangent at the base point");
  return tangent_pairing(p, u, v);
}

double gen_cos(Param p, double s) {
  const double t = p.t();
  const double u = -t * s * s;
  if (std::fabs(u) < kSeriesThreshold) return 1.0 + u / 2.0 + u * u / 24.0;
  const double r = std::sqrt(std::fabs(t));
  return t > 0.0 ? std::cos(r * s) : std::cosh(r * s);
}

double gen_sin(Param p, double s) {
  const double t = p.t();
  const double u = -t * s * s;
  if (std::fabs(u) < kSeriesThreshold) return s * (1.0 + u / 6.0 + u * u / 120.0);
  const double r = std::sqrt(std::fabs(t));
  return t > 0.0 ? std::sin(r * s) / r : std::sinh(r * s) / r;
}

double gen_tan(Param p, double s) { return gen_sin(p, s) / gen_cos(p, s); }

}  // namespace transgeo
