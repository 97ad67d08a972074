#pragma once

#include <array>

#include "transgeo/form.hpp"

namespace transgeo {

/// Three points of E_t in general position; sides are minor arcs when t > 0.
class Triangle {
 public:
  /// Throws DegenerateTriangle for coincident/collinear vertices or, when t > 0,
  /// for vertices whose minor arcs do not bound a single triangle.
  static Triangle make(const ModelPoint& a, const ModelPoint& b, const ModelPoint& c);

  const ModelPoint& A() const noexcept { return v_[0]; }
  const ModelPoint& B() const noexcept { return v_[1]; }
  const ModelPoint& C() const noexcept { return v_[2]; }
  const std::array<ModelPoint, 3>& vertices() const noexcept { return v_; }
  Param param() const noexcept { return v_[0].param(); }

  /// Relabels (A, B, C) -> (B, C, A).
  Triangle rotated() const;

 private:
  explicit Triangle(const std::array<ModelPoint, 3>& v) : v_(v) {}
  std::array<ModelPoint, 3> v_;
};

/// Sides a, b, c opposite A, B, C; angles in (0, pi); area in normalized units.
struct TriangleMeasurements {
  double t = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  double A = 0.0, B = 0.0, C = 0.0;
  double area = 0.0;

  double angle_sum() const { return A + B + C; }
};

inline constexpr double kRightAngleTolerance = 1e-9;

/// Area is (A + B + C - pi) / t for t != 0 and the planar cross product at t = 0.
TriangleMeasurements measure(const Triangle& tri);

/// Relabels cyclically so the right angle sits at C; NoRightAngle if there is none.
Triangle with_right_angle_at_c(const Triangle& tri, double tol = kRightAngleTolerance);

/// |gen_cos(c) - gen_cos(a) gen_cos(b)| for t != 0, |c^2 - a^2 - b^2| for t = 0.
/// Needs the right angle at C.
double pythagoras_check(const Triangle& tri);

/// Residuals of the six right-triangle identities (right angle at C), in order:
///   cos c = cos a cos b,     sin b = sin c sin B,   tan a = tan c cos B,
///   cos c = cot A cot B,     cos A = cos a sin B,   tan a = sin b tan A,
/// with sides scaled by sqrt|t| (cosh/sinh/tanh for t < 0). Rows 2, 3 and 6 are
/// divided by sqrt|t| so they reduce to the Euclidean column at t = 0, where row 1
/// is c^2 = a^2 + b^2.
std::array<double, 6> right_triangle_table_check(const Triangle& tri);

/// gen_sin(side) / sin(opposite angle) for the three sides.
std::array<double, 3> sine_rule_ratios(const Triangle& tri);

/// Euler's spherical area formula in E_t (t > 0), normalized by 1/t:
///   cos(D/2) = (1 + cos sa + cos sb + cos sc) / (4 cos(sa/2) cos(sb/2) cos(sc/2)),
///   area = D / t,  s = sqrt(t).
double area_euler(Param p, double a, double b, double c);

/// The triangle (0,0,1), (x,0,1), (0,y,1) with its right angle at A.
Triangle build_right_triangle(Param p, double x, double y);

/// Right angle at C = (0,0,1) with legs of length a (toward B, along y) and
/// b (toward A, along x), built with the exponential map.
Triangle right_triangle_from_legs(Param p, double a, double b);

/// Angle excess (A + B + C - pi) divided by the flat Heron area of the side
/// lengths; tends to the curvature t as the triangle shrinks.
double curvature_estimate(const Triangle& tri);

/// Planar triangle area from side lengths (numerically stable Heron form).
double heron_area(double a, double b, double c);

}  // namespace transgeo
