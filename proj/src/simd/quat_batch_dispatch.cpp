#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nks3/simd/quat_batch.hpp"

namespace nks3::simd {

namespace {

bool cpu_has_avx2() {
#if defined(NKS3_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa probe() {
  if (const char* force = std::getenv("NKS3_FORCE_SCALAR"); force && std::string(force) == "1") {
    return Isa::kScalar;
  }
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

void check_sizes(const QuatConstView& a, const QuatConstView& b, const QuatView& out) {
  const std::size_t n = a.size();
  const bool ok = a.x.size() == n && a.y.size() == n && a.z.size() == n && b.size() == n &&
                  b.x.size() == n && b.y.size() == n && b.z.size() == n && out.size() == n &&
                  out.x.size() == n && out.y.size() == n && out.z.size() == n;
  if (!ok) throw std::invalid_argument("quaternion batch: mismatched lengths");
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

void mul(QuatConstView a, QuatConstView b, QuatView out, Isa isa) {
  check_sizes(a, b, out);
  if (isa == Isa::kAvx2 && cpu_has_avx2()) {
    mul_avx2(a, b, out);
  } else {
    mul_scalar(a, b, out);
  }
}

void conj_mul(QuatConstView a, QuatConstView b, QuatView out, Isa isa) {
  check_sizes(a, b, out);
  if (isa == Isa::kAvx2 && cpu_has_avx2()) {
    conj_mul_avx2(a, b, out);
  } else {
    conj_mul_scalar(a, b, out);
  }
}

}  // namespace nks3::simd
