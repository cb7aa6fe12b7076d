#pragma once

// Quaternion arithmetic in double precision.
//
// q = w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1. Unit quaternions
// form S^3 and imaginary quaternions form R^3; both are used as raw pairs
// (U, V) for tangent vectors of S^3 x S^3.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace nks3 {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w{w_}, x{x_}, y{y_}, z{z_} {}
  constexpr explicit Quaternion(double real) : w{real} {}

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  // e_1 = i, e_2 = j, e_3 = k; index is zero based.
  static constexpr Quaternion unit_imaginary(int index) {
    return index == 0 ? i() : (index == 1 ? j() : k());
  }

  constexpr double operator[](int c) const {
    return c == 0 ? w : (c == 1 ? x : (c == 2 ? y : z));
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr double norm2(const Quaternion& q) { return dot(q, q); }
inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

// Throws DomainError for the zero quaternion.
Quaternion inverse(const Quaternion& q);

// Throws DomainError for the zero quaternion.
Quaternion normalized(const Quaternion& q);

constexpr Quaternion real_part(const Quaternion& q) { return {q.w, 0.0, 0.0, 0.0}; }
constexpr Quaternion imaginary_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

// exp of a purely imaginary quaternion: cos|v| + sin|v| v/|v|.
Quaternion exp_imaginary(const Quaternion& v);

// Pure imaginary quaternion (a point of R^3 = Im H).
struct ImaginaryQuaternion {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr ImaginaryQuaternion() = default;
  constexpr ImaginaryQuaternion(double x_, double y_, double z_) : x{x_}, y{y_}, z{z_} {}

  // Drops the real part.
  static constexpr ImaginaryQuaternion from(const Quaternion& q) { return {q.x, q.y, q.z}; }

  constexpr Quaternion quat() const { return {0.0, x, y, z}; }
  constexpr operator Quaternion() const { return quat(); }
};

constexpr ImaginaryQuaternion cross(const ImaginaryQuaternion& u, const ImaginaryQuaternion& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

// 1/2 (uv - vu); equals u x v for imaginary arguments.
constexpr ImaginaryQuaternion bracket(const ImaginaryQuaternion& u, const ImaginaryQuaternion& v) {
  const Quaternion c = (u.quat() * v.quat() - v.quat() * u.quat()) * 0.5;
  return ImaginaryQuaternion::from(c);
}

// Uniform sample on S^3: a normalized 4D standard Gaussian.
template <class Rng>
Quaternion sample_unit(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double n = norm(q);
    if (n > 1e-12) return q / n;
  }
}

// Uniform sample on the unit sphere S^2 of imaginary quaternions.
template <class Rng>
ImaginaryQuaternion sample_unit_imaginary(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const ImaginaryQuaternion v{gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    if (n > 1e-12) return {v.x / n, v.y / n, v.z / n};
  }
}

// Seeded generator used by all sampling code.
using Rng = std::mt19937_64;

}  // namespace nks3
