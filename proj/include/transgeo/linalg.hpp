#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace transgeo {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const Vec3&) const = default;

  bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Euclidean helpers on coordinates; the geometry's own pairing is bilinear_form().
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double max_abs(const Vec3& v) {
  return std::fmax(std::fabs(v.x), std::fmax(std::fabs(v.y), std::fabs(v.z)));
}

constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> a{};

  static constexpr Mat3 identity() { return diag(1.0, 1.0, 1.0); }
  static constexpr Mat3 diag(double d0, double d1, double d2) {
    return Mat3{{d0, 0.0, 0.0, 0.0, d1, 0.0, 0.0, 0.0, d2}};
  }
  static constexpr Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    return Mat3{{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
  }
  /// u vᵀ
  static constexpr Mat3 outer(const Vec3& u, const Vec3& v) {
    return Mat3{{u.x * v.x, u.x * v.y, u.x * v.z, u.y * v.x, u.y * v.y, u.y * v.z, u.z * v.x,
                 u.z * v.y, u.z * v.z}};
  }

  constexpr double& operator()(std::size_t r, std::size_t c) { return a[3 * r + c]; }
  constexpr double operator()(std::size_t r, std::size_t c) const { return a[3 * r + c]; }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 m;
    for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] + o.a[i];
    return m;
  }
  constexpr Mat3 operator-(const Mat3& o) const {
    Mat3 m;
    for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] - o.a[i];
    return m;
  }
  constexpr Mat3 operator*(double s) const {
    Mat3 m;
    for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] * s;
    return m;
  }
  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        m(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c) + (*this)(r, 2) * o(2, c);
    return m;
  }
  constexpr Vec3 operator*(const Vec3& v) const {
    return {a[0] * v.x + a[1] * v.y + a[2] * v.z, a[3] * v.x + a[4] * v.y + a[5] * v.z,
            a[6] * v.x + a[7] * v.y + a[8] * v.z};
  }

  constexpr Mat3 transpose() const {
    return Mat3{{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}};
  }

  constexpr double det() const {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  }

  /// Adjugate inverse; the caller guarantees det() != 0.
  Mat3 inverse() const;

  bool is_finite() const {
    for (double v : a)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

/// Entrywise maximum norm of a - b.
double max_abs_diff(const Mat3& a, const Mat3& b);

}  // namespace transgeo
