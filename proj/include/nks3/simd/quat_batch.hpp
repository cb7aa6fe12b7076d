#pragma once

// Batched quaternion kernels over structure-of-arrays storage.
//
// A scalar reference kernel is always built; an AVX2 kernel is built on x86-64
// and chosen at runtime when the CPU reports AVX2. Both kernels evaluate the
// same expression tree with separate multiply and add (no FMA), so results
// agree to the last ulp on conforming hardware.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nks3/quat.hpp"

namespace nks3::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best kernel supported by the running CPU. NKS3_FORCE_SCALAR=1 pins kScalar.
Isa detected_isa();

struct QuatConstView {
  std::span<const double> w, x, y, z;
  std::size_t size() const { return w.size(); }
};

struct QuatView {
  std::span<double> w, x, y, z;
  std::size_t size() const { return w.size(); }
  operator QuatConstView() const { return {w, x, y, z}; }
};

// Owning SoA buffer.
class QuatArray {
 public:
  QuatArray() = default;
  explicit QuatArray(std::size_t n) : w_(n), x_(n), y_(n), z_(n) {}

  std::size_t size() const { return w_.size(); }
  void set(std::size_t i, const Quaternion& q) {
    w_[i] = q.w; x_[i] = q.x; y_[i] = q.y; z_[i] = q.z;
  }
  Quaternion get(std::size_t i) const { return {w_[i], x_[i], y_[i], z_[i]}; }

  QuatConstView view() const { return {w_, x_, y_, z_}; }
  QuatView view() { return {w_, x_, y_, z_}; }

 private:
  std::vector<double> w_, x_, y_, z_;
};

// out[n] = a[n] * b[n]. All views must have equal length; out may alias a or b.
void mul_scalar(QuatConstView a, QuatConstView b, QuatView out);
void mul_avx2(QuatConstView a, QuatConstView b, QuatView out);
void mul(QuatConstView a, QuatConstView b, QuatView out, Isa isa = detected_isa());

// out[n] = conj(a[n]) * b[n]; the frame coefficients of a vector b at base a.
void conj_mul_scalar(QuatConstView a, QuatConstView b, QuatView out);
void conj_mul_avx2(QuatConstView a, QuatConstView b, QuatView out);
void conj_mul(QuatConstView a, QuatConstView b, QuatView out, Isa isa = detected_isa());

}  // namespace nks3::simd
