#include "nks3/quat.hpp"

namespace nks3 {

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm2(q);
  if (!(n2 > 0.0)) throw DomainError("inverse of the zero quaternion");
  return conjugate(q) / n2;
}

Quaternion normalized(const Quaternion& q) {
  const double n = norm(q);
  if (!(n > 0.0)) throw DomainError("cannot normalize the zero quaternion");
  return q / n;
}

Quaternion exp_imaginary(const Quaternion& v) {
  const double theta = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  if (theta < 1e-300) return Quaternion::one();
  const double s = std::sin(theta) / theta;
  return {std::cos(theta), s * v.x, s * v.y, s * v.z};
}

}  // namespace nks3
