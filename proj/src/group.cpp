#include "transgeo/group.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "transgeo/error.hpp"

namespace transgeo {

namespace {

Mat3 rotation_z(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Mat3{{c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0}};
}

// q_t-rotation in the (x, z) plane with C^2 + t S^2 = 1.
Mat3 xz_rotation(double t, double c, double s) {
  return Mat3{{c, 0.0, s, 0.0, 1.0, 0.0, -t * s, 0.0, c}};
}

double block_orthogonality(const Mat3& m) {
  const double c00 = m(0, 0) * m(0, 0) + m(1, 0) * m(1, 0);
  const double c11 = m(0, 1) * m(0, 1) + m(1, 1) * m(1, 1);
  const double c01 = m(0, 0) * m(0, 1) + m(1, 0) * m(1, 1);
  return std::max({std::fabs(c00 - 1.0), std::fabs(c11 - 1.0), std::fabs(c01)});
}

double euclidean_shape_residual(const Mat3& m) {
  return std::max({std::fabs(m(2, 0)), std::fabs(m(2, 1)), std::fabs(m(2, 2) - 1.0),
                   block_orthogonality(m), std::fabs(m.det() - 1.0)});
}

}  // namespace

double form_residual(Param p, const Mat3& m) {
  const Mat3 g = gram(p);
  return max_abs_diff(m.transpose() * g * m, g);
}

bool is_isometry(Param p, const Mat3& m, double tol) {
  if (!m.is_finite()) return false;
  if (form_residual(p, m) > tol) return false;
  if (std::fabs(m.det() - 1.0) > tol) return false;
  if (p.t() == 0.0 && block_orthogonality(m) > tol) return false;
  return true;
}

Isometry Isometry::checked(Param p, const Mat3& m, double tol) {
  if (!is_isometry(p, m, tol)) fail(ErrorCode::InvalidArgument, "matrix is not in I_t");
  return Isometry(p, m);
}

ModelPoint Isometry::apply(const ModelPoint& x) const {
  if (!(x.param() == param_)) fail(ErrorCode::MixedParam, "isometry and point differ in t");
  return normalize_point(param_, m_ * x.rep());
}

Isometry Isometry::operator*(const Isometry& o) const {
  if (!(o.param_ == param_)) fail(ErrorCode::MixedParam, "isometries differ in t");
  return Isometry(param_, m_ * o.m_);
}

Isometry Isometry::inverse() const { return Isometry(param_, m_.inverse()); }

Isometry involution(const ModelPoint& p) {
  const Param par = p.param();
  const Vec3& r = p.rep();
  return Isometry(par, Mat3::outer(r, gram(par) * r) * 2.0 - Mat3::identity());
}

Isometry stabilizer_rotation(const ModelPoint& p, double theta) {
  const Param par = p.param();
  const Vec3& r = p.rep();
  const double rho = std::hypot(r.x, r.y);
  const double phi = std::atan2(r.y, r.x);
  // transporter carries (0,0,1) to r: translate along x by |r|, then turn by phi
  const Mat3 to = rotation_z(phi) * xz_rotation(par.t(), r.z, rho);
  const Mat3 from = xz_rotation(par.t(), r.z, -rho) * rotation_z(-phi);
  return Isometry(par, to * rotation_z(theta) * from);
}

std::vector<ModelPoint> circle_orbit(const ModelPoint& center, const ModelPoint& through,
                                     std::size_t n) {
  if (!(center.param() == through.param())) fail(ErrorCode::MixedParam, "points differ in t");
  if (same_point(center, through)) fail(ErrorCode::CoincidentPoints, "circle of radius zero");
  if (n == 0) fail(ErrorCode::InvalidArgument, "need at least one sample");
  std::vector<ModelPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(stabilizer_rotation(center, theta).apply(through));
  }
  return out;
}

Isometry coherent_translation(double d, Param p) {
  if (!std::isfinite(d)) fail(ErrorCode::InvalidArgument, "non-finite translation length");
  return Isometry(p, xz_rotation(p.t(), gen_cos(p, d), gen_sin(p, d)));
}

CoherentFamilyReport check_coherent_family(std::span<const FamilySample> samples, double tol) {
  const bool has_neg = std::any_of(samples.begin(), samples.end(), [](auto& s) { return s.t < 0; });
  const bool has_pos = std::any_of(samples.begin(), samples.end(), [](auto& s) { return s.t > 0; });
  if (samples.size() < kMinFamilySamples || !has_neg || !has_pos)
    fail(ErrorCode::InsufficientSamples,
         "need at least 9 samples covering both signs of t");

  CoherentFamilyReport report;
  double worst_member = 0.0;
  const FamilySample* at_zero = nullptr;
  for (const FamilySample& s : samples) {
    const Param p(s.t);
    const SampleResidual r{s.t, form_residual(p, s.m), std::fabs(s.m.det() - 1.0)};
    report.samples.push_back(r);
    worst_member = std::max({worst_member, r.residual_qt, r.residual_det});
    if (s.t == 0.0) at_zero = &s;
  }

  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd vander(n, kFamilyFitDegree + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    double power = 1.0;
    for (int k = 0; k <= kFamilyFitDegree; ++k, power *= samples[i].t) vander(i, k) = power;
  }
  const auto qr = vander.colPivHouseholderQr();
  Mat3 constant_terms;
  for (std::size_t e = 0; e < 9; ++e) {
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = samples[i].m.a[e];
    const Eigen::VectorXd c = qr.solve(y);
    report.fit_residual = std::max(report.fit_residual, (vander * c - y).cwiseAbs().maxCoeff());
    constant_terms.a[e] = c(0);
  }

  // An extrapolated limit is only as good as the fit.
  report.limit_matrix = at_zero ? at_zero->m : constant_terms;
  const double shape_tol = at_zero ? tol : std::max(tol, kFamilyFitTolerance);
  report.limit_shape_residual = euclidean_shape_residual(report.limit_matrix);

  report.is_coherent = worst_member <= tol && report.fit_residual <= kFamilyFitTolerance &&
                       report.limit_shape_residual <= shape_tol;

  const Mat3& l = report.limit_matrix;
  const double class_tol = std::max(shape_tol, 1e-9);
  const bool block_is_identity = std::fabs(l(0, 0) - 1.0) <= class_tol && std::fabs(l(1, 1) - 1.0) <= class_tol &&
                                 std::fabs(l(0, 1)) <= class_tol && std::fabs(l(1, 0)) <= class_tol;
  if (!block_is_identity)
    report.euclidean_class = EuclideanClass::RotationAboutPoint;
  else if (std::hypot(l(0, 2), l(1, 2)) > class_tol)
    report.euclidean_class = EuclideanClass::Translation;
  else
    report.euclidean_class = EuclideanClass::Identity;
  return report;
}

double commutator_deviation(const ModelPoint& a, const ModelPoint& b, const ModelPoint& c,
                            const ModelPoint& d) {
  const Mat3 ab = involution(a).matrix() * involution(b).matrix();
  const Mat3 cd = involution(c).matrix() * involution(d).matrix();
  return max_abs_diff(ab * cd, cd * ab);
}

LineAxiomReport line_axiom_check(std::span<const ModelPoint> points, double tol) {
  if (points.size() < 4) fail(ErrorCode::TooFewPoints, "need at least four points");
  const Param p = points[0].param();
  for (const ModelPoint& x : points)
    if (!(x.param() == p)) fail(ErrorCode::MixedParam, "points differ in t");

  std::vector<Mat3> invs;
  invs.reserve(points.size());
  for (const ModelPoint& x : points) invs.push_back(involution(x).matrix());

  std::vector<Mat3> products;
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t j = 0; j < invs.size(); ++j)
      if (i != j) products.push_back(invs[i] * invs[j]);

  LineAxiomReport report;
  for (std::size_t i = 0; i < products.size(); ++i)
    for (std::size_t j = i + 1; j < products.size(); ++j)
      report.max_deviation = std::max(
          report.max_deviation, max_abs_diff(products[i] * products[j], products[j] * products[i]));

  // negative control: turn the second point a quarter turn about the first
  const ModelPoint& a = points[0];
  const auto other = std::find_if(points.begin() + 1, points.end(),
                                  [&](const ModelPoint& x) { return !same_point(a, x); });
  if (other == points.end()) fail(ErrorCode::CoincidentPoints, "all points coincide");
  const ModelPoint off = stabilizer_rotation(a, std::numbers::pi / 2.0).apply(*other);
  report.control_deviation = commutator_deviation(a, *other, a, off);
  // at t = 0 every s_a s_b is a translation, so the control commutes too
  report.certified =
      report.max_deviation <= tol && (p.t() == 0.0 || report.control_deviation > tol);
  return report;
}

}  // namespace transgeo
