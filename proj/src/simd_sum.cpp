#include "relaxtime/simd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace relaxtime::simd {

namespace detail {

double weighted_sum_scalar(const double* w, const double* f, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += w[i] * f[i];
    s1 += w[i + 1] * f[i + 1];
    s2 += w[i + 2] * f[i + 2];
    s3 += w[i + 3] * f[i + 3];
  }
  for (; i < n; ++i) s0 += w[i] * f[i];
  return (s0 + s1) + (s2 + s3);
}

void weighted_sum2_scalar(const double* w, const double* re, const double* im, std::size_t n,
                          double* out_re, double* out_im) {
  *out_re = weighted_sum_scalar(w, re, n);
  *out_im = weighted_sum_scalar(w, im, n);
}

#if !defined(RELAXTIME_HAVE_AVX2)
double weighted_sum_avx2(const double* w, const double* f, std::size_t n) {
  return weighted_sum_scalar(w, f, n);
}
void weighted_sum2_avx2(const double* w, const double* re, const double* im, std::size_t n,
                        double* out_re, double* out_im) {
  weighted_sum2_scalar(w, re, im, n, out_re, out_im);
}
#endif

#if !(defined(__aarch64__) || defined(__ARM_NEON))
double weighted_sum_neon(const double* w, const double* f, std::size_t n) {
  return weighted_sum_scalar(w, f, n);
}
void weighted_sum2_neon(const double* w, const double* re, const double* im, std::size_t n,
                        double* out_re, double* out_im) {
  weighted_sum2_scalar(w, re, im, n, out_re, out_im);
}
#endif

}  // namespace detail

bool level_available(Level level) {
  switch (level) {
    case Level::Scalar:
      return true;
    case Level::AVX2:
#if defined(RELAXTIME_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Level::NEON:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const char* level_name(Level level) {
  switch (level) {
    case Level::Scalar:
      return "scalar";
    case Level::AVX2:
      return "avx2";
    case Level::NEON:
      return "neon";
  }
  return "unknown";
}

namespace {

Level detect_level() {
  if (const char* env = std::getenv("RELAXTIME_SIMD")) {
    const std::string name(env);
    for (Level level : {Level::Scalar, Level::AVX2, Level::NEON}) {
      if (name == level_name(level)) {
        if (!level_available(level)) {
          throw std::runtime_error("RELAXTIME_SIMD=" + name + " is not supported on this CPU");
        }
        return level;
      }
    }
    throw std::runtime_error("RELAXTIME_SIMD=" + name + " is unknown");
  }
  if (level_available(Level::AVX2)) return Level::AVX2;
  if (level_available(Level::NEON)) return Level::NEON;
  return Level::Scalar;
}

}  // namespace

Level active_level() {
  static const Level level = detect_level();
  return level;
}

double weighted_sum_at(Level level, const double* w, const double* f, std::size_t n) {
  switch (level) {
    case Level::AVX2:
      return detail::weighted_sum_avx2(w, f, n);
    case Level::NEON:
      return detail::weighted_sum_neon(w, f, n);
    case Level::Scalar:
      break;
  }
  return detail::weighted_sum_scalar(w, f, n);
}

std::complex<double> weighted_sum_at(Level level, const double* w, const double* re,
                                     const double* im, std::size_t n) {
  double r = 0.0, i = 0.0;
  switch (level) {
    case Level::AVX2:
      detail::weighted_sum2_avx2(w, re, im, n, &r, &i);
      break;
    case Level::NEON:
      detail::weighted_sum2_neon(w, re, im, n, &r, &i);
      break;
    case Level::Scalar:
      detail::weighted_sum2_scalar(w, re, im, n, &r, &i);
      break;
  }
  return {r, i};
}

double weighted_sum(const double* w, const double* f, std::size_t n) {
  return weighted_sum_at(active_level(), w, f, n);
}

std::complex<double> weighted_sum(const double* w, const double* re, const double* im,
                                  std::size_t n) {
  return weighted_sum_at(active_level(), w, re, im, n);
}

}  // namespace relaxtime::simd
