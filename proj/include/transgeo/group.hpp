#pragma once

#include <span>
#include <vector>

#include "transgeo/form.hpp"

namespace transgeo {

/// True iff m^T G_t m = G_t entrywise within tol and |det m - 1| <= tol. At t = 0
/// the upper-left 2x2 block must also be orthogonal (orientation-preserving
/// Euclidean motions are the coherent part of the affine group).
bool is_isometry(Param p, const Mat3& m, double tol = 1e-10);

/// Largest entry of |m^T G_t m - G_t|.
double form_residual(Param p, const Mat3& m);

/// An element of the isometry group I_t acting linearly on the model.
class Isometry {
 public:
  /// Validates with is_isometry(p, m, tol); throws InvalidArgument otherwise.
  static Isometry checked(Param p, const Mat3& m, double tol = 1e-10);

  const Mat3& matrix() const noexcept { return m_; }
  Param param() const noexcept { return param_; }

  ModelPoint apply(const ModelPoint& x) const;
  Vec3 apply(const Vec3& v) const { return m_ * v; }
  Isometry operator*(const Isometry& o) const;
  Isometry inverse() const;

 private:
  friend Isometry involution(const ModelPoint&);
  friend Isometry stabilizer_rotation(const ModelPoint&, double);
  friend Isometry coherent_translation(double, Param);
  Isometry(Param p, const Mat3& m) : m_(m), param_(p) {}

  Mat3 m_;
  Param param_;
};

/// s_P(v) = 2 beta_t(v, P) P - v: the order-two element of the stabilizer of P.
Isometry involution(const ModelPoint& p);

/// Rotation by theta about P: the standard rotation about (0,0,1) conjugated by
/// a transporter carrying (0,0,1) to P.
Isometry stabilizer_rotation(const ModelPoint& p, double theta);

/// n samples of the circle centred at `center` through `through`.
std::vector<ModelPoint> circle_orbit(const ModelPoint& center, const ModelPoint& through,
                                     std::size_t n);

/// The q_t-rotation in the (x, z) plane by generalized angle d:
///   (x, y, z) -> (C x + S z, y, -t S x + C z),  C = gen_cos(d), S = gen_sin(d).
/// Entries are analytic in t; at t = 0 it is the translation (x, y) -> (x + d, y).
Isometry coherent_translation(double d, Param p);

struct FamilySample {
  double t;
  Mat3 m;
};

enum class EuclideanClass { Identity, Translation, RotationAboutPoint };

struct SampleResidual {
  double t;
  double residual_qt;
  double residual_det;
};

struct CoherentFamilyReport {
  std::vector<SampleResidual> samples;
  Mat3 limit_matrix;
  /// Worst residual of a degree-4 polynomial fit of any entry over t.
  double fit_residual = 0.0;
  /// Worst deviation of limit_matrix from the Euclidean-motion shape.
  double limit_shape_residual = 0.0;
  bool is_coherent = false;
  EuclideanClass euclidean_class = EuclideanClass::Identity;
};

inline constexpr std::size_t kMinFamilySamples = 9;
inline constexpr int kFamilyFitDegree = 4;
inline constexpr double kFamilyFitTolerance = 1e-8;

/// Checks a sampled one-parameter family A(t) for coherence: membership in every
/// I_t, a polynomial fit in t as a proxy for analyticity, and the shape of the
/// t -> 0 limit. Needs >= 9 samples with both signs of t (InsufficientSamples).
CoherentFamilyReport check_coherent_family(std::span<const FamilySample> samples, double tol = 1e-10);

struct LineAxiomReport {
  /// max ||(s_i s_j)(s_k s_l) - (s_k s_l)(s_i s_j)||_inf over the given points.
  double max_deviation = 0.0;
  /// Same commutator for a quadruple with one point moved off the line; 0 at t = 0.
  double control_deviation = 0.0;
  bool certified = false;
};

/// Abelian property of products of involutions along a line; >= 4 points.
LineAxiomReport line_axiom_check(std::span<const ModelPoint> points, double tol = 1e-10);

/// ||(s_a s_b)(s_c s_d) - (s_c s_d)(s_a s_b)||_inf.
double commutator_deviation(const ModelPoint& a, const ModelPoint& b, const ModelPoint& c,
                            const ModelPoint& d);

}  // namespace transgeo
