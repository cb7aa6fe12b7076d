#pragma once

// Pointwise quaternionic formulas for the homogeneous nearly Kaehler
// structure on S^3 x S^3: the almost complex structure J, the Hermitian
// metric g, the almost product structure P and the product structure Q.
//
// These functions work directly on raw quaternion pairs and serve as an
// independent reference for the frame engine.

#include <algorithm>

#include "nks3/quat.hpp"

namespace nks3 {

// Tolerance on |p| = |q| = 1 and on tangency of (U, V).
inline constexpr double kTangencyTolerance = 1e-10;

struct AmbientPoint {
  Quaternion p = Quaternion::one();
  Quaternion q = Quaternion::one();
};

// Raw element (U, V) of H x H. Used both for tangent vectors and, during
// differentiation, for arbitrary vectors of R^8.
struct QuatPair {
  Quaternion U;
  Quaternion V;

  QuatPair& operator+=(const QuatPair& o) { U += o.U; V += o.V; return *this; }
  QuatPair& operator-=(const QuatPair& o) { U -= o.U; V -= o.V; return *this; }
  QuatPair& operator*=(double s) { U *= s; V *= s; return *this; }
};

inline QuatPair operator+(QuatPair a, const QuatPair& b) { return a += b; }
inline QuatPair operator-(QuatPair a, const QuatPair& b) { return a -= b; }
inline QuatPair operator-(const QuatPair& a) { return {-a.U, -a.V}; }
inline QuatPair operator*(double s, QuatPair a) { return a *= s; }
inline QuatPair operator*(QuatPair a, double s) { return a *= s; }

// Tangent vector Z = (U, V) at a point; <U,p> = <V,q> = 0.
using TangentVector = QuatPair;

// Standard product (Euclidean R^8) inner product.
inline double euclidean_dot(const QuatPair& a, const QuatPair& b) {
  return dot(a.U, b.U) + dot(a.V, b.V);
}

// Normalizes p and q. Throws DomainError if either is zero.
AmbientPoint make_point(const Quaternion& p, const Quaternion& q);

// True when |p|, |q| are within kTangencyTolerance of one.
bool on_manifold(const AmbientPoint& at, double tol = kTangencyTolerance);

// Removes the <U,p>p and <V,q>q components.
TangentVector project_tangent(const AmbientPoint& at, const QuatPair& z);

bool is_tangent(const AmbientPoint& at, const QuatPair& z, double tol = kTangencyTolerance);

// JZ = 1/sqrt3 (2 p q^-1 V - U, -2 q p^-1 U + V).
TangentVector apply_J(const AmbientPoint& at, const TangentVector& z);

// g(Z, Z') = 1/2 (<Z,Z'> + <JZ,JZ'>).
double metric_g(const AmbientPoint& at, const TangentVector& z, const TangentVector& zp);

// Expanded form: 4/3(<U,U'> + <V,V'>) - 2/3(<p^-1 U, q^-1 V'> + <p^-1 U', q^-1 V>).
double metric_g_expanded(const AmbientPoint& at, const TangentVector& z, const TangentVector& zp);

inline double norm_g(const AmbientPoint& at, const TangentVector& z) {
  return std::sqrt(std::max(0.0, metric_g(at, z, z)));
}

// PZ = (p q^-1 V, q p^-1 U).
TangentVector apply_P(const AmbientPoint& at, const TangentVector& z);

// QZ = (-U, V).
TangentVector apply_Q(const AmbientPoint& at, const TangentVector& z);

// 1/sqrt3 (2 PJZ - JZ); agrees with apply_Q.
TangentVector apply_Q_via_PJ(const AmbientPoint& at, const TangentVector& z);

// Random tangent vector with N(0,1) frame coefficients.
TangentVector sample_tangent(const AmbientPoint& at, Rng& rng);

AmbientPoint sample_point(Rng& rng);

}  // namespace nks3
