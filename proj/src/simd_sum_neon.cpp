#include <arm_neon.h>

#include "relaxtime/simd.hpp"

namespace relaxtime::simd::detail {

double weighted_sum_neon(const double* w, const double* f, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(w + i), vld1q_f64(f + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(w + i + 2), vld1q_f64(f + i + 2));
  }
  double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) sum += w[i] * f[i];
  return sum;
}

void weighted_sum2_neon(const double* w, const double* re, const double* im, std::size_t n,
                        double* out_re, double* out_im) {
  float64x2_t acc_re = vdupq_n_f64(0.0);
  float64x2_t acc_im = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t wv = vld1q_f64(w + i);
    acc_re = vfmaq_f64(acc_re, wv, vld1q_f64(re + i));
    acc_im = vfmaq_f64(acc_im, wv, vld1q_f64(im + i));
  }
  double sr = vaddvq_f64(acc_re);
  double si = vaddvq_f64(acc_im);
  for (; i < n; ++i) {
    sr += w[i] * re[i];
    si += w[i] * im[i];
  }
  *out_re = sr;
  *out_im = si;
}

}  // namespace relaxtime::simd::detail
