#include "relaxtime/bethe.hpp"

#include <algorithm>
#include <cmath>

#include "relaxtime/quadrature.hpp"
#include "relaxtime/simd.hpp"
#include "relaxtime/special_functions.hpp"

namespace relaxtime {

double theta0(cplx z, bool lower_side) {
  if (lower_side && z.imag() == 0.0 && z.real() < 0.0) return -2.0 * kPi;
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * kPi;  // a in [0, 2 pi)
  if (a <= kPi) return 2.0 * a;
  return -2.0 * (2.0 * kPi - a);
}

cplx bethe_root(cplx z, int k, bool lower_side) {
  const double r = std::abs(z);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("bethe roots require 0 < |z| < 1");
  const double theta = -theta0(z, lower_side) + 4.0 * kPi * k;
  return -std::sqrt(cplx(-2.0 * std::log(r), theta));
}

BetheSet enumerate_roots(cplx z, int K) {
  if (K < 1) throw DomainError("enumerate_roots: K must be at least 1");
  BetheSet set;
  set.z = z;
  set.K = K;
  set.roots.reserve(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    const cplx u = bethe_root(z, k);
    set.roots.push_back({k, u, q_function(u, z)});
  }
  return set;
}

namespace {

void check_sector(cplx xi) {
  const double a = std::arg(xi);
  if (!(std::abs(a) > 0.75 * kPi)) {
    throw SectorError("Q: argument outside the sector 3pi/4 < arg < 5pi/4");
  }
}

}  // namespace

cplx q_function(cplx xi, cplx z) {
  check_sector(xi);
  // Q(xi) = -(1/pi) int_R log(1 - z e^{-y^2/2}) / (i y - xi) dy
  const double az = std::abs(z);
  if (az == 0.0) return 0.0;
  const double ymax = std::sqrt(std::max(2.0 * (std::log(az) + 41.5), 1.0));
  // Panels no wider than the distance from xi to the integration line.
  const double width = std::clamp(std::abs(xi), 0.1, 1.0);
  const int panels = 2 * static_cast<int>(std::ceil(ymax / width));
  const GaussRule rule = composite_rule(-ymax, ymax, panels, 20);
  const std::size_t n = rule.x.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = rule.x[i];
    const cplx f = std::log(1.0 - z * std::exp(-0.5 * y * y)) / (cplx(0.0, y) - xi);
    re[i] = f.real();
    im[i] = f.imag();
  }
  return -simd::weighted_sum(rule.w.data(), re.data(), im.data(), n) / kPi;
}

cplx q_function(cplx xi) { return q_function(xi, std::exp(-0.5 * xi * xi)); }

cplx q_function_direct(cplx xi) {
  check_sector(xi);
  // s = xi t, t from infinity down to 1.
  const double r = std::abs(xi);
  const double tmax = std::sqrt(90.0) / std::max(r * std::sqrt(std::cos(2.0 * std::arg(xi))), 1e-3) + 1.0;
  const double tend = std::max(tmax, 2.0);
  // The polylog argument turns through Im(xi^2) t^2 / 2 radians; keep about one radian per panel.
  const double phase = 0.5 * std::abs((xi * xi).imag()) * tend * tend;
  const int panels = std::clamp(static_cast<int>(std::ceil(phase)), 64, 4096);
  const GaussRule rule = composite_rule(1.0, tend, panels, 20);
  const std::size_t n = rule.x.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx s = xi * rule.x[i];
    const cplx f = polylog(kLiHalf, std::exp(-0.5 * s * s));
    re[i] = f.real();
    im[i] = f.imag();
  }
  const cplx integral = -xi * simd::weighted_sum(rule.w.data(), re.data(), im.data(), n);
  return std::sqrt(2.0 / kPi) * integral;
}

cplx exponent_phi(cplx xi, cplx q_value, const ExponentParams& p) {
  return -p.tau * xi * xi * xi / 3.0 + p.x * xi - q_value;
}

cplx exponent_phi(cplx xi, const ExponentParams& p) { return exponent_phi(xi, q_function(xi), p); }

cplx exponent_psi(cplx xi, cplx q_value, const ExponentParams& p) {
  return -p.tau * xi * xi * xi / 3.0 + p.x * xi - 0.5 * q_value;
}

cplx exponent_psi(cplx xi, const ExponentParams& p) { return exponent_psi(xi, q_function(xi), p); }

cplx exponent_v(cplx u, const ExponentParams& p) {
  return -p.tau * u * u * u / 3.0 + 0.5 * p.gamma * u * u + p.x * u;
}

namespace {

double log_weight(const BetheRoot& r, const ExponentParams& p, bool flat) {
  if (flat) return exponent_psi(r.u, r.Q, p).real();
  const double half = 0.5 * exponent_phi(r.u, r.Q, p).real();
  const double shift = 0.25 * p.gamma * (r.u * r.u).real();
  return half + std::abs(shift);
}

double tail_ratio(const BetheSet& set, const ExponentParams& p, bool flat) {
  double peak = -1e300;
  for (const auto& r : set.roots) peak = std::max(peak, log_weight(r, p, flat));
  const double edge = std::max(log_weight(set.roots.front(), p, flat),
                               log_weight(set.roots.back(), p, flat));
  return std::exp(edge - peak);
}

}  // namespace

double truncation_tail_ratio(const BetheSet& set, const ExponentParams& p) {
  return tail_ratio(set, p, false);
}

double truncation_tail_ratio_flat(const BetheSet& set, const ExponentParams& p) {
  return tail_ratio(set, p, true);
}

BetheSet extend_roots(const BetheSet& set, int K) {
  if (K <= set.K) return set;
  BetheSet out;
  out.z = set.z;
  out.K = K;
  out.roots.reserve(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    if (std::abs(k) <= set.K) {
      out.roots.push_back(set.at_k(k));
    } else {
      const cplx u = bethe_root(set.z, k);
      out.roots.push_back({k, u, q_function(u, set.z)});
    }
  }
  return out;
}

BetheSet adequate_roots(const BetheSet& set, const ExponentParams& p, double tol, bool flat) {
  BetheSet current = set;
  while (tail_ratio(current, p, flat) > tol && current.K < kMaxTruncation) {
    current = extend_roots(current, std::min(current.K + 4, kMaxTruncation));
  }
  return current;
}

}  // namespace relaxtime
