#include "quadpairs/kernels.hpp"

#if QP_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cassert>

// Functions here carry target("avx2") individually instead of compiling the
// translation unit with -mavx2, so no AVX2 code leaks into inline functions
// shared with the baseline build. Callers must check CPU support first.
#define QP_AVX2 __attribute__((target("avx2")))

namespace qp::kernels::avx2 {

QP_AVX2 void axpy_i32(std::span<std::int32_t> y, std::int32_t a,
                      std::span<const std::int32_t> x) {
  assert(y.size() == x.size());
  const std::size_t n = y.size();
  const __m256i va = _mm256_set1_epi32(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    vy = _mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), vy);
  }
  for (; i < n; ++i)
    y[i] += a * x[i];
}

QP_AVX2 std::size_t count_equal_i32(std::span<const std::int32_t> x,
                                    std::int32_t value) {
  const std::size_t n = x.size();
  const __m256i vv = _mm256_set1_epi32(value);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(vx, vv)));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i)
    count += (x[i] == value);
  return count;
}

QP_AVX2 std::pair<std::int32_t, std::int32_t>
minmax_i32(std::span<const std::int32_t> x) {
  assert(!x.empty());
  const std::size_t n = x.size();
  std::int32_t lo = x[0], hi = x[0];
  std::size_t i = 0;
  if (n >= 8) {
    __m256i vlo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data()));
    __m256i vhi = vlo;
    for (i = 8; i + 8 <= n; i += 8) {
      __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
      vlo = _mm256_min_epi32(vlo, vx);
      vhi = _mm256_max_epi32(vhi, vx);
    }
    alignas(32) std::int32_t lbuf[8], hbuf[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lbuf), vlo);
    _mm256_store_si256(reinterpret_cast<__m256i*>(hbuf), vhi);
    for (int k = 0; k < 8; ++k) {
      lo = lbuf[k] < lo ? lbuf[k] : lo;
      hi = hbuf[k] > hi ? hbuf[k] : hi;
    }
  }
  for (; i < n; ++i) {
    lo = x[i] < lo ? x[i] : lo;
    hi = x[i] > hi ? x[i] : hi;
  }
  return {lo, hi};
}

// t = y + a*x < p^2 + p < 2^31 for p <= kMaxModulus. The quotient is
// estimated in single precision (off by at most one either way for these
// magnitudes) and the remainder is corrected into [0, p).
QP_AVX2 void axpy_mod(std::span<std::uint32_t> y, std::uint32_t a,
                      std::span<const std::uint32_t> x, std::uint32_t p) {
  assert(y.size() == x.size());
  assert(p >= 2 && p <= kMaxModulus);
  const std::size_t n = y.size();
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
  const __m256i zero = _mm256_setzero_si256();
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx));
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(t), vinv));
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), r);
  }
  for (; i < n; ++i)
    y[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(y[i]) +
         static_cast<std::uint64_t>(a) * x[i]) % p);
}

} // namespace qp::kernels::avx2

#endif
