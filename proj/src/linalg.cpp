#include "transgeo/linalg.hpp"

namespace transgeo {

Mat3 Mat3::inverse() const {
  const double d = det();
  Mat3 inv{{a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
            a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
            a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3]}};
  return inv * (1.0 / d);
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 9; ++i) m = std::fmax(m, std::fabs(a.a[i] - b.a[i]));
  return m;
}

}  // namespace transgeo
