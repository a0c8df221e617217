#pragma once

#include <complex>
#include <cstddef>

namespace relaxtime::simd {

enum class Level { Scalar, AVX2, NEON };

// Level used by the dispatching entry points. Chosen once from the CPU and the
// RELAXTIME_SIMD environment variable ("scalar", "avx2", "neon").
Level active_level();
const char* level_name(Level level);
bool level_available(Level level);

// sum_i w[i] * f[i]
double weighted_sum(const double* w, const double* f, std::size_t n);

// sum_i w[i] * (re[i] + i im[i])
std::complex<double> weighted_sum(const double* w, const double* re, const double* im,
                                  std::size_t n);

// Explicit-level variants, used by the equivalence tests.
double weighted_sum_at(Level level, const double* w, const double* f, std::size_t n);
std::complex<double> weighted_sum_at(Level level, const double* w, const double* re,
                                     const double* im, std::size_t n);

namespace detail {
double weighted_sum_scalar(const double* w, const double* f, std::size_t n);
void weighted_sum2_scalar(const double* w, const double* re, const double* im, std::size_t n,
                          double* out_re, double* out_im);
double weighted_sum_avx2(const double* w, const double* f, std::size_t n);
void weighted_sum2_avx2(const double* w, const double* re, const double* im, std::size_t n,
                        double* out_re, double* out_im);
double weighted_sum_neon(const double* w, const double* f, std::size_t n);
void weighted_sum2_neon(const double* w, const double* re, const double* im, std::size_t n,
                        double* out_re, double* out_im);
}  // namespace detail

}  // namespace relaxtime::simd
