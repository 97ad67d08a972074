#pragma once

// Named quantities of fixed configurations, evaluated as functions of t.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transgeo/io.hpp"
#include "transgeo/linalg.hpp"
#include "transgeo/transition.hpp"

namespace transgeo {

/// Geometric inputs held fixed while t varies.
///
/// x, y are the ray parameters of B = (x,0,1) and C = (0,y,1); for the
/// euler-expansion quantity they are the legs of the right triangle. p, q are
/// optional raw rays for the distance quantity.
struct QuantityConfig {
  double x = 1.0;
  double y = 1.0;
  std::optional<Vec3> p;
  std::optional<Vec3> q;
};

/// Scalar quantities:
///   distance          D_t(p, q), or D_t(A, B) without p, q
///   hypotenuse        D_t(B, C)
///   angle             angle at A of the right triangle A, B, C
///   angle-b           angle at B
///   area              normalized area of A, B, C
///   pyth-residual     pythagoras_check of A, B, C
///   euler-expansion   1 - cos^2(D/2), D the unnormalized Euler area of the
///                     right triangle with legs x, y
/// Throws UnknownQuantity for any other name.
Evaluator scalar_quantity(const std::string& name, const QuantityConfig& cfg);

/// All names accepted by sweep_table.
std::vector<std::string> quantity_names();

/// One row per grid value for scalar quantities (columns t, value), plus
///   table-residuals   columns t, r1..r6
///   surface-profile   columns t, x, z: the y = 0 section of S_t per grid value
DataTable sweep_table(const std::string& name, const QuantityConfig& cfg,
                      std::span<const double> grid);

/// Number of samples per t in a surface-profile table.
inline constexpr int kProfileSamples = 65;

/// n + 1 samples of the geodesic from p to q, columns s, x, y, z.
DataTable geodesic_polyline(double t, const Vec3& p, const Vec3& q, int n);

}  // namespace transgeo
