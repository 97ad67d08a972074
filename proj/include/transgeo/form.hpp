#pragma once

// Quadratic form layer of the transitional family E_t.
//
// Every geometry E_t, t in [-1, 1], is modelled on the level set
//   S_t = { v : t x^2 + t y^2 + z^2 = 1 }
// modulo v ~ -v. Hyperbolic for t < 0 (upper hyperboloid sheet), Euclidean for
// t = 0 (plane z = 1), elliptic for t > 0 (ellipsoid, antipodes identified).
// Lengths are normalized so that E_t has constant curvature t.

#include "transgeo/linalg.hpp"

namespace transgeo {

enum class Regime { Hyperbolic, Euclidean, Elliptic };

/// The transition parameter t, restricted to [-1, 1].
class Param {
 public:
  explicit Param(double t);

  double t() const noexcept { return t_; }
  Regime regime() const noexcept;
  /// sqrt(|t|); the s = sqrt(t) of the area expansion when t > 0.
  double sqrt_abs() const noexcept;

  bool operator==(const Param&) const = default;

 private:
  double t_;
};

/// Gram matrix diag(t, t, 1) of q_t.
Mat3 gram(Param p);

double quad_form(Param p, const Vec3& v);
double bilinear_form(Param p, const Vec3& u, const Vec3& v);

/// A point of E_t: a q_t-unit representative with canonical sign.
///
/// Canonical sign is z > 0, or z == 0 and the first nonzero of (x, y) positive,
/// so equality of points of E_t is equality of representatives.
class ModelPoint {
 public:
  const Vec3& rep() const noexcept { return rep_; }
  Param param() const noexcept { return param_; }
  double t() const noexcept { return param_.t(); }

 private:
  friend ModelPoint normalize_point(Param p, const Vec3& v);
  ModelPoint(const Vec3& rep, Param p) : rep_(rep), param_(p) {}

  Vec3 rep_;
  Param param_;
};

/// Intersects the ray through v with S_t and picks the canonical representative.
/// Throws NullVector for v = 0 and OutsideCone when q_t(v) <= 0.
ModelPoint normalize_point(Param p, const Vec3& v);

/// Flips v into the canonical half-space (see ModelPoint).
Vec3 canonical_sign(const Vec3& v);

/// Quotient-level equality: representatives are parallel up to a relative tolerance.
bool same_point(const ModelPoint& a, const ModelPoint& b, double tol = 1e-12);

/// Riemannian metric on the tangent plane at `at`: beta_t / t for t != 0 and the
/// flat x,y pairing for t = 0. Throws NotTangent when u or v is off the tangent
/// plane by more than 1e-9 in |beta_t(., at)|.
double tangent_metric(const ModelPoint& at, const Vec3& u, const Vec3& v);

/// Same pairing without the tangency check.
double tangent_pairing(Param p, const Vec3& u, const Vec3& v);

inline constexpr double kTangencyTolerance = 1e-9;

// Generalized trigonometric functions, analytic in (t, s):
//   gen_cos = cos(sqrt(t) s)          | 1 | cosh(sqrt(-t) s)
//   gen_sin = sin(sqrt(t) s)/sqrt(t)  | s | sinh(sqrt(-t) s)/sqrt(-t)
// with gen_cos^2 + t gen_sin^2 = 1.
double gen_cos(Param p, double s);
double gen_sin(Param p, double s);
double gen_tan(Param p, double s);

}  // namespace transgeo
