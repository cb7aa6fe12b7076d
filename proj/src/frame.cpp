#include "nks3/frame.hpp"

#include <cmath>

#include "nks3/simd/quat_batch.hpp"

namespace nks3 {

namespace {

Quaternion imaginary(double a, double b, double c) { return {0.0, a, b, c}; }

// Imaginary parts of p^-1 U and q^-1 V for unit p, q.
FrameVector frame_coefficients(const AmbientPoint& at, const TangentVector& z) {
  const Quaternion u = conjugate(at.p) * z.U;
  const Quaternion v = conjugate(at.q) * z.V;
  FrameVector c;
  c << u.x, u.y, u.z, v.x, v.y, v.z;
  return c;
}

}  // namespace

FrameVector to_frame(const AmbientPoint& at, const TangentVector& z) {
  return frame_coefficients(at, project_tangent(at, z));
}

TangentVector to_tangent(const AmbientPoint& at, const FrameVector& c) {
  return {at.p * imaginary(c(0), c(1), c(2)), at.q * imaginary(c(3), c(4), c(5))};
}

void to_frame_batch(std::span<const AmbientPoint> points, std::span<const TangentVector> vectors,
                    std::span<FrameVector> out) {
  const std::size_t n = points.size();
  if (vectors.size() != n || out.size() != n) {
    throw std::invalid_argument("to_frame_batch: mismatched lengths");
  }
  simd::QuatArray base_p(n), base_q(n), vec_u(n), vec_v(n), res_u(n), res_v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const TangentVector z = project_tangent(points[i], vectors[i]);
    base_p.set(i, points[i].p);
    base_q.set(i, points[i].q);
    vec_u.set(i, z.U);
    vec_v.set(i, z.V);
  }
  simd::conj_mul(std::as_const(base_p).view(), std::as_const(vec_u).view(), res_u.view());
  simd::conj_mul(std::as_const(base_q).view(), std::as_const(vec_v).view(), res_v.view());
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion u = res_u.get(i);
    const Quaternion v = res_v.get(i);
    out[i] << u.x, u.y, u.z, v.x, v.y, v.z;
  }
}

FrameVector StructureTables::lie_bracket(const FrameVector& x, const FrameVector& y) const {
  FrameVector r = FrameVector::Zero();
  for (int a = 0; a < kAmbientDim; ++a) r += x(a) * (bracket[a] * y);
  return r;
}

FrameVector StructureTables::nabla(const FrameVector& x, const FrameVector& y) const {
  FrameVector r = FrameVector::Zero();
  for (int a = 0; a < kAmbientDim; ++a) r += x(a) * (connection[a] * y);
  return r;
}

FrameVector StructureTables::tensor_G(const FrameVector& x, const FrameVector& y) const {
  FrameVector r = FrameVector::Zero();
  for (int a = 0; a < kAmbientDim; ++a) r += x(a) * (g_tensor[a] * y);
  return r;
}

FrameVector StructureTables::nabla_P(const FrameVector& x, const FrameVector& y) const {
  return nabla(x, P * y) - P * nabla(x, y);
}

FrameVector StructureTables::curvature_from_connection(const FrameVector& x, const FrameVector& y,
                                                       const FrameVector& z) const {
  FrameVector r = FrameVector::Zero();
  for (int a = 0; a < kAmbientDim; ++a) {
    for (int b = 0; b < kAmbientDim; ++b) {
      const double w = x(a) * y(b);
      if (w != 0.0) r += w * (curvature[a][b] * z);
    }
  }
  return r;
}

FrameVector StructureTables::curvature_closed_form(const FrameVector& x, const FrameVector& y,
                                                   const FrameVector& z) const {
  const FrameVector jx = J * x, jy = J * y, jz = J * z;
  const FrameVector px = P * x, py = P * y;
  const FrameVector jpx = J * px, jpy = J * py;
  FrameVector r = 5.0 / 12.0 * (metric(y, z) * x - metric(x, z) * y);
  r += 1.0 / 12.0 * (metric(jy, z) * jx - metric(jx, z) * jy - 2.0 * metric(jx, y) * jz);
  r += 1.0 / 3.0 *
       (metric(py, z) * px - metric(px, z) * py + metric(jpy, z) * jpx - metric(jpx, z) * jpy);
  return r;
}

double StructureTables::sectional(const FrameVector& x, const FrameVector& y) const {
  return metric(curvature_from_connection(x, y, y), x);
}

StructureTables build_tables() {
  StructureTables t;
  const double s = 1.0 / std::sqrt(3.0);
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();

  // J E_i = -(E_i + 2F_i)/sqrt3,  J F_i = (2E_i + F_i)/sqrt3.
  t.J.setZero();
  t.J.block<3, 3>(0, 0) = -s * id;
  t.J.block<3, 3>(3, 0) = -2.0 * s * id;
  t.J.block<3, 3>(0, 3) = 2.0 * s * id;
  t.J.block<3, 3>(3, 3) = s * id;

  // The frame is orthonormal for the product metric, so g = 1/2 (I + J^T J).
  t.g = 0.5 * (Mat6::Identity() + t.J.transpose() * t.J);

  t.P.setZero();
  t.P.block<3, 3>(0, 3) = id;
  t.P.block<3, 3>(3, 0) = id;

  t.Q.setZero();
  t.Q.block<3, 3>(0, 0) = -id;
  t.Q.block<3, 3>(3, 3) = id;

  // [X_u, X_v] = X_{uv - vu} = X_{2 u x v} on each factor.
  for (int a = 0; a < kAmbientDim; ++a) {
    t.bracket[a].setZero();
    for (int b = 0; b < kAmbientDim; ++b) {
      if ((a < 3) != (b < 3)) continue;
      const int off = a < 3 ? 0 : 3;
      const int ia = a - off, ib = b - off;
      if (ia == ib) continue;
      const int ic = 3 - ia - ib;
      // e_ia x e_ib = +e_ic for cyclic (ia, ib, ic), -e_ic otherwise.
      const double sign = ((ib - ia + 3) % 3 == 1) ? 1.0 : -1.0;
      t.bracket[a](off + ic, b) = 2.0 * sign;
    }
  }

  // Reduced Koszul formula.
  const Mat6 g_inv = t.g.inverse();
  const auto e = [](int i) { return FrameVector::Unit(i); };
  for (int a = 0; a < kAmbientDim; ++a) {
    for (int b = 0; b < kAmbientDim; ++b) {
      FrameVector lowered;
      for (int c = 0; c < kAmbientDim; ++c) {
        lowered(c) = 0.5 * (t.metric(t.bracket[a].col(b), e(c)) -
                            t.metric(t.bracket[a].col(c), e(b)) -
                            t.metric(t.bracket[b].col(c), e(a)));
      }
      t.connection[a].col(b) = g_inv * lowered;
    }
  }

  for (int a = 0; a < kAmbientDim; ++a) {
    t.g_tensor[a] = t.connection[a] * t.J - t.J * t.connection[a];
  }

  // R(e_a, e_b) = nabla_a nabla_b - nabla_b nabla_a - sum_d C_ab^d nabla_d.
  for (int a = 0; a < kAmbientDim; ++a) {
    for (int b = 0; b < kAmbientDim; ++b) {
      Mat6 r = t.connection[a] * t.connection[b] - t.connection[b] * t.connection[a];
      for (int d = 0; d < kAmbientDim; ++d) r -= t.bracket[a](d, b) * t.connection[d];
      t.curvature[a][b] = r;
    }
  }
  return t;
}

const StructureTables& tables() {
  static const StructureTables instance = build_tables();
  return instance;
}

double nabla_P_residual(const StructureTables& t, const FrameVector& x, const FrameVector& y) {
  const FrameVector lhs = 2.0 * t.nabla_P(x, y);
  const FrameVector rhs = t.J * t.tensor_G(x, t.P * y) + t.J * (t.P * t.tensor_G(x, y));
  return t.norm(lhs - rhs);
}

double torsion_residual(const StructureTables& t) {
  double worst = 0.0;
  for (int a = 0; a < kAmbientDim; ++a) {
    for (int b = 0; b < kAmbientDim; ++b) {
      const FrameVector r = t.connection[a].col(b) - t.connection[b].col(a) - t.bracket[a].col(b);
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double metric_compatibility_residual(const StructureTables& t) {
  double worst = 0.0;
  for (int a = 0; a < kAmbientDim; ++a) {
    const Mat6 m = t.connection[a].transpose() * t.g + t.g * t.connection[a];
    worst = std::max(worst, m.cwiseAbs().maxCoeff());
  }
  return worst;
}

FrameVector euclidean_connection(const AmbientPoint& at, const FrameVector& x,
                                 const FrameVector& y) {
  // Y(p', q') = (p' y_E, q' y_F) extends to R^8; its flat derivative along
  // X = (U_X, V_X) is (U_X y_E, V_X y_F).
  const TangentVector xv = to_tangent(at, x);
  const Quaternion y_e = imaginary(y(0), y(1), y(2));
  const Quaternion y_f = imaginary(y(3), y(4), y(5));
  const QuatPair flat{xv.U * y_e, xv.V * y_f};
  return to_frame(at, flat);
}

double euclidean_relation_residual(const StructureTables& t, const AmbientPoint& at,
                                   const FrameVector& x, const FrameVector& y) {
  const FrameVector lhs = euclidean_connection(at, x, y);
  const FrameVector rhs =
      t.nabla(x, y) + 0.5 * (t.J * t.tensor_G(x, t.P * y) + t.J * t.tensor_G(y, t.P * x));
  return t.norm(lhs - rhs);
}

FrameVector sample_frame_vector(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FrameVector c;
  for (int i = 0; i < kAmbientDim; ++i) c(i) = gauss(rng);
  return c;
}

}  // namespace nks3
