#include <immintrin.h>

#include "relaxtime/simd.hpp"

namespace relaxtime::simd::detail {

namespace {

inline double horizontal_sum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double weighted_sum_avx2(const double* w, const double* f, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(f + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(f + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(f + i), acc0);
  }
  double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += w[i] * f[i];
  return sum;
}

void weighted_sum2_avx2(const double* w, const double* re, const double* im, std::size_t n,
                        double* out_re, double* out_im) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    acc_re = _mm256_fmadd_pd(wv, _mm256_loadu_pd(re + i), acc_re);
    acc_im = _mm256_fmadd_pd(wv, _mm256_loadu_pd(im + i), acc_im);
  }
  double sr = horizontal_sum(acc_re);
  double si = horizontal_sum(acc_im);
  for (; i < n; ++i) {
    sr += w[i] * re[i];
    si += w[i] * im[i];
  }
  *out_re = sr;
  *out_im = si;
}

}  // namespace relaxtime::simd::detail
