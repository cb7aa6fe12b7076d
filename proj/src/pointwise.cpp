#include "nks3/pointwise.hpp"

#include <algorithm>
#include <cmath>

namespace nks3 {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

}  // namespace

AmbientPoint make_point(const Quaternion& p, const Quaternion& q) {
  return {normalized(p), normalized(q)};
}

bool on_manifold(const AmbientPoint& at, double tol) {
  return std::abs(norm(at.p) - 1.0) <= tol && std::abs(norm(at.q) - 1.0) <= tol;
}

TangentVector project_tangent(const AmbientPoint& at, const QuatPair& z) {
  const double pp = norm2(at.p);
  const double qq = norm2(at.q);
  return {z.U - at.p * (dot(z.U, at.p) / pp), z.V - at.q * (dot(z.V, at.q) / qq)};
}

bool is_tangent(const AmbientPoint& at, const QuatPair& z, double tol) {
  return std::abs(dot(z.U, at.p)) <= tol && std::abs(dot(z.V, at.q)) <= tol;
}

TangentVector apply_J(const AmbientPoint& at, const TangentVector& z) {
  const Quaternion pqi = at.p * inverse(at.q);
  const Quaternion qpi = at.q * inverse(at.p);
  return {(2.0 * (pqi * z.V) - z.U) * kInvSqrt3, (-2.0 * (qpi * z.U) + z.V) * kInvSqrt3};
}

double metric_g(const AmbientPoint& at, const TangentVector& z, const TangentVector& zp) {
  return 0.5 * (euclidean_dot(z, zp) + euclidean_dot(apply_J(at, z), apply_J(at, zp)));
}

double metric_g_expanded(const AmbientPoint& at, const TangentVector& z, const TangentVector& zp) {
  const Quaternion pi = inverse(at.p);
  const Quaternion qi = inverse(at.q);
  const double flat = dot(z.U, zp.U) + dot(z.V, zp.V);
  const double mixed = dot(pi * z.U, qi * zp.V) + dot(pi * zp.U, qi * z.V);
  return 4.0 / 3.0 * flat - 2.0 / 3.0 * mixed;
}

TangentVector apply_P(const AmbientPoint& at, const TangentVector& z) {
  return {at.p * inverse(at.q) * z.V, at.q * inverse(at.p) * z.U};
}

TangentVector apply_Q(const AmbientPoint&, const TangentVector& z) { return {-z.U, z.V}; }

TangentVector apply_Q_via_PJ(const AmbientPoint& at, const TangentVector& z) {
  const TangentVector jz = apply_J(at, z);
  return (2.0 * apply_P(at, jz) - jz) * kInvSqrt3;
}

TangentVector sample_tangent(const AmbientPoint& at, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quaternion u{0.0, gauss(rng), gauss(rng), gauss(rng)};
  Quaternion v{0.0, gauss(rng), gauss(rng), gauss(rng)};
  return {at.p * u, at.q * v};
}

AmbientPoint sample_point(Rng& rng) {
  const Quaternion p = sample_unit(rng);
  const Quaternion q = sample_unit(rng);
  return {p, q};
}

}  // namespace nks3
