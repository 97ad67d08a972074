#pragma once

#include <array>

#include "transgeo/form.hpp"

namespace transgeo {

/// A geodesic of E_t, stored as the normal of its plane through the origin.
///
/// For t != 0 the normal N is the beta_t-normal (beta_t(N, v) = 0 on the line),
/// scaled to q_t(N) = 1 for t > 0 (N is then the pole) and q_t(N) = -1 for t < 0.
/// For t = 0 it is (n_x, n_y, -c) for n_x x + n_y y = c on the plane z = 1, with
/// |(n_x, n_y)| = 1. Canonical sign as for points.
class Line {
 public:
  /// Builds the line cut out by the plane { v : dot(covector, v) = 0 }.
  static Line from_covector(Param p, const Vec3& covector);

  Param param() const noexcept { return param_; }
  const Vec3& normal() const noexcept { return normal_; }
  /// Euclidean coefficients of the plane: G_t * normal for t != 0, normal for t = 0.
  Vec3 covector() const;

 private:
  Line(Param p, const Vec3& n) : param_(p), normal_(n) {}

  Param param_;
  Vec3 normal_;
};

/// Unnormalized arccos (t > 0) / arccosh (t < 0) distance. ZeroParam at t = 0.
double angular_distance(const ModelPoint& a, const ModelPoint& b);

/// Normalized distance D_t: angular distance / sqrt|t|, Euclidean at t = 0.
double distance(const ModelPoint& a, const ModelPoint& b);

/// Initial tangent at `from` of the minor geodesic arc toward `to` (not normalized).
Vec3 tangent_toward(const ModelPoint& from, const ModelPoint& to);

/// Same, scaled to unit length in the tangent metric. CoincidentPoints if from == to.
Vec3 unit_tangent_toward(const ModelPoint& from, const ModelPoint& to);

/// Exponential map: the point at arclength s along the unit-speed geodesic
/// leaving `start` with tangent `dir`. NotUnitTangent unless dir is a unit tangent.
ModelPoint geodesic_point(const ModelPoint& start, const Vec3& dir, double s);

Line line_through(const ModelPoint& a, const ModelPoint& b);

bool on_line(const Line& line, const ModelPoint& p, double tol = 1e-9);

/// Intersection point of two lines. CoincidentLines when they coincide,
/// OutsideCone when they do not meet in E_t (ultraparallel or Euclidean-parallel).
ModelPoint intersect(const Line& l1, const Line& l2);

/// Angle in [0, pi] at `vertex` between the minor arcs toward p and q.
double angle(const ModelPoint& vertex, const ModelPoint& p, const ModelPoint& q);

// Elliptic polarity; all three throw NonPositiveParam unless t > 0.
ModelPoint pole(const Line& line);
Line equator(const ModelPoint& p);
bool perpendicular(const Line& l1, const Line& l2, double tol = 1e-9);

/// Maximum pairwise distance between the three pairwise intersections of the
/// internal angle bisectors; zero for concurrent bisectors.
double angle_bisector_spread(const std::array<ModelPoint, 3>& vertices);

}  // namespace transgeo
