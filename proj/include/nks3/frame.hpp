#pragma once

// Structure-constant realization of the nearly Kaehler S^3 x S^3.
//
// In the global left-invariant frame
//   E_i = (p e_i, 0),  F_i = (0, q e_i),   e_1 = i, e_2 = j, e_3 = k,
// the tensors g, J, P, Q have constant coefficient matrices and the Lie
// brackets are structure constants ([E_u, E_v] = E_{2 u x v}, likewise for F,
// and [E, F] = 0). Since every g-product of frame fields is constant, the
// Koszul formula reduces to
//   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([X,Z],Y) - g([Y,Z],X)
// and the Levi-Civita connection, G = nabla J and the curvature tensor are
// obtained by pure table algebra.
//
// Frame index convention: 0..2 are E_1..E_3, 3..5 are F_1..F_3.

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nks3/pointwise.hpp"

namespace nks3 {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Six frame coefficients (c_1..c_3 on E_i, d_1..d_3 on F_i).
using FrameVector = Vec6;

inline constexpr int kAmbientDim = 6;

// Frame coefficients of a tangent vector at `at`.
FrameVector to_frame(const AmbientPoint& at, const TangentVector& z);

// Tangent vector with the given frame coefficients at `at`.
TangentVector to_tangent(const AmbientPoint& at, const FrameVector& c);

// Batched to_frame over many (point, vector) pairs; uses the SIMD quaternion
// kernels. out.size() must equal points.size() and vectors.size().
void to_frame_batch(std::span<const AmbientPoint> points, std::span<const TangentVector> vectors,
                    std::span<FrameVector> out);

class StructureTables {
 public:
  // Constant coefficient matrices; column b is the image of frame vector b.
  Mat6 g;
  Mat6 J;
  Mat6 P;
  Mat6 Q;

  // bracket[a].col(b) = [e_a, e_b].
  std::array<Mat6, 6> bracket;
  // connection[a].col(b) = nabla_{e_a} e_b.
  std::array<Mat6, 6> connection;
  // g_tensor[a].col(b) = G(e_a, e_b).
  std::array<Mat6, 6> g_tensor;
  // curvature[a][b].col(c) = R(e_a, e_b) e_c from the connection tables.
  std::array<std::array<Mat6, 6>, 6> curvature;

  double metric(const FrameVector& x, const FrameVector& y) const { return x.dot(g * y); }
  double norm(const FrameVector& x) const { return std::sqrt(std::max(0.0, metric(x, x))); }

  FrameVector apply_J(const FrameVector& x) const { return J * x; }
  FrameVector apply_P(const FrameVector& x) const { return P * x; }
  FrameVector apply_Q(const FrameVector& x) const { return Q * x; }

  FrameVector lie_bracket(const FrameVector& x, const FrameVector& y) const;

  // nabla_X Y for fields with constant frame coefficients.
  FrameVector nabla(const FrameVector& x, const FrameVector& y) const;

  // G(X, Y) = nabla_X (JY) - J nabla_X Y.
  FrameVector tensor_G(const FrameVector& x, const FrameVector& y) const;

  // (nabla_X P) Y = nabla_X (PY) - P nabla_X Y.
  FrameVector nabla_P(const FrameVector& x, const FrameVector& y) const;

  // R(X,Y)Z from nabla nabla - nabla nabla - nabla_[,].
  FrameVector curvature_from_connection(const FrameVector& x, const FrameVector& y,
                                        const FrameVector& z) const;

  // Closed-form curvature tensor in terms of g, J and P.
  FrameVector curvature_closed_form(const FrameVector& x, const FrameVector& y,
                                    const FrameVector& z) const;

  // Sectional-curvature numerator g(R(X,Y)Y, X).
  double sectional(const FrameVector& x, const FrameVector& y) const;
};

// Builds all tables. Cheap; the result is immutable.
StructureTables build_tables();

// Process-wide immutable instance.
const StructureTables& tables();

// |2 (nabla_X P) Y - J G(X, PY) - J P G(X, Y)|_g.
double nabla_P_residual(const StructureTables& t, const FrameVector& x, const FrameVector& y);

// Largest |nabla_X Y - nabla_Y X - [X,Y]| over frame pairs.
double torsion_residual(const StructureTables& t);

// Largest |g(nabla_a e_b, e_c) + g(e_b, nabla_a e_c)| over frame triples
// (the frame products are constant, so this is metric compatibility).
double metric_compatibility_residual(const StructureTables& t);

// Flat derivative of the constant-coefficient field Y along X, projected to
// the tangent space of S^3 x S^3 (the Euclidean connection), computed with
// quaternion products at `at` and returned in frame coefficients.
FrameVector euclidean_connection(const AmbientPoint& at, const FrameVector& x,
                                 const FrameVector& y);

// | nabla^E_X Y - nabla_X Y - 1/2 (J G(X,PY) + J G(Y,PX)) |_g.
double euclidean_relation_residual(const StructureTables& t, const AmbientPoint& at,
                                   const FrameVector& x, const FrameVector& y);

// Random frame coefficients, N(0,1) each.
FrameVector sample_frame_vector(Rng& rng);

}  // namespace nks3
