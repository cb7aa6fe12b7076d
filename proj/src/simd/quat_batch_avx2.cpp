// Compiled with -mavx2 -ffp-contract=off; only reached through the runtime
// dispatcher after a CPUID check.

#include "nks3/simd/quat_batch.hpp"

#if defined(NKS3_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace nks3::simd {

#if defined(NKS3_HAVE_AVX2)

namespace {

constexpr std::size_t kLanes = 4;

template <bool kConjugateLeft>
void hamilton_avx2(QuatConstView a, QuatConstView b, QuatView out) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % kLanes;
  const __m256d sign = _mm256_set1_pd(-0.0);

  for (std::size_t i = 0; i < body; i += kLanes) {
    const __m256d aw = _mm256_loadu_pd(&a.w[i]);
    __m256d ax = _mm256_loadu_pd(&a.x[i]);
    __m256d ay = _mm256_loadu_pd(&a.y[i]);
    __m256d az = _mm256_loadu_pd(&a.z[i]);
    if constexpr (kConjugateLeft) {
      ax = _mm256_xor_pd(ax, sign);
      ay = _mm256_xor_pd(ay, sign);
      az = _mm256_xor_pd(az, sign);
    }
    const __m256d bw = _mm256_loadu_pd(&b.w[i]);
    const __m256d bx = _mm256_loadu_pd(&b.x[i]);
    const __m256d by = _mm256_loadu_pd(&b.y[i]);
    const __m256d bz = _mm256_loadu_pd(&b.z[i]);

    __m256d rw = _mm256_sub_pd(_mm256_mul_pd(aw, bw), _mm256_mul_pd(ax, bx));
    rw = _mm256_sub_pd(rw, _mm256_mul_pd(ay, by));
    rw = _mm256_sub_pd(rw, _mm256_mul_pd(az, bz));

    __m256d rx = _mm256_add_pd(_mm256_mul_pd(aw, bx), _mm256_mul_pd(ax, bw));
    rx = _mm256_add_pd(rx, _mm256_mul_pd(ay, bz));
    rx = _mm256_sub_pd(rx, _mm256_mul_pd(az, by));

    __m256d ry = _mm256_sub_pd(_mm256_mul_pd(aw, by), _mm256_mul_pd(ax, bz));
    ry = _mm256_add_pd(ry, _mm256_mul_pd(ay, bw));
    ry = _mm256_add_pd(ry, _mm256_mul_pd(az, bx));

    __m256d rz = _mm256_add_pd(_mm256_mul_pd(aw, bz), _mm256_mul_pd(ax, by));
    rz = _mm256_sub_pd(rz, _mm256_mul_pd(ay, bx));
    rz = _mm256_add_pd(rz, _mm256_mul_pd(az, bw));

    _mm256_storeu_pd(&out.w[i], rw);
    _mm256_storeu_pd(&out.x[i], rx);
    _mm256_storeu_pd(&out.y[i], ry);
    _mm256_storeu_pd(&out.z[i], rz);
  }

  if (body == n) return;
  const auto tail = [body](auto s) { return s.subspan(body); };
  const QuatConstView ta{tail(a.w), tail(a.x), tail(a.y), tail(a.z)};
  const QuatConstView tb{tail(b.w), tail(b.x), tail(b.y), tail(b.z)};
  const QuatView to{tail(out.w), tail(out.x), tail(out.y), tail(out.z)};
  if constexpr (kConjugateLeft) {
    conj_mul_scalar(ta, tb, to);
  } else {
    mul_scalar(ta, tb, to);
  }
}

}  // namespace

void mul_avx2(QuatConstView a, QuatConstView b, QuatView out) { hamilton_avx2<false>(a, b, out); }
void conj_mul_avx2(QuatConstView a, QuatConstView b, QuatView out) { hamilton_avx2<true>(a, b, out); }

#else

void mul_avx2(QuatConstView a, QuatConstView b, QuatView out) { mul_scalar(a, b, out); }
void conj_mul_avx2(QuatConstView a, QuatConstView b, QuatView out) { conj_mul_scalar(a, b, out); }

#endif

}  // namespace nks3::simd
