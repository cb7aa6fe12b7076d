#include "nks3/simd/quat_batch.hpp"

namespace nks3::simd {

void mul_scalar(QuatConstView a, QuatConstView b, QuatView out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double aw = a.w[i], ax = a.x[i], ay = a.y[i], az = a.z[i];
    const double bw = b.w[i], bx = b.x[i], by = b.y[i], bz = b.z[i];
    out.w[i] = ((aw * bw - ax * bx) - ay * by) - az * bz;
    out.x[i] = ((aw * bx + ax * bw) + ay * bz) - az * by;
    out.y[i] = ((aw * by - ax * bz) + ay * bw) + az * bx;
    out.z[i] = ((aw * bz + ax * by) - ay * bx) + az * bw;
  }
}

void conj_mul_scalar(QuatConstView a, QuatConstView b, QuatView out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double aw = a.w[i], ax = -a.x[i], ay = -a.y[i], az = -a.z[i];
    const double bw = b.w[i], bx = b.x[i], by = b.y[i], bz = b.z[i];
    out.w[i] = ((aw * bw - ax * bx) - ay * by) - az * bz;
    out.x[i] = ((aw * bx + ax * bw) + ay * bz) - az * by;
    out.y[i] = ((aw * by - ax * bz) + ay * bw) + az * bx;
    out.z[i] = ((aw * bz + ax * by) - ay * bx) + az * bw;
  }
}

}  // namespace nks3::simd
