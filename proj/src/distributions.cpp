#include "relaxtime/distributions.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "relaxtime/bethe.hpp"
#include "relaxtime/fredholm.hpp"
#include "relaxtime/kernels.hpp"
#include "relaxtime/parallel.hpp"
#include "relaxtime/quadrature.hpp"
#include "relaxtime/riemann_sheet.hpp"
#include "relaxtime/special_functions.hpp"

namespace relaxtime {

cplx CircleQuadrature::node(int j) const {
  j %= M;
  if (j < 0) j += M;
  if (2 * j == M) return {-radius, 0.0};
  if (2 * j > M) return std::conj(node(M - j));
  return std::polar(radius, 2.0 * kPi * j / M);
}

void CircleQuadrature::validate() const {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("circle radius must lie in (0, 1)");
  if (M < 16 || (M & (M - 1)) != 0) throw DomainError("circle node count must be a power of two >= 16");
}

double default_radius(RadiusMode mode, double tau, double x) {
  switch (mode) {
    case RadiusMode::SmallTau:
      return std::exp(-0.5 / std::pow(tau, 2.0 / 3.0));
    case RadiusMode::Tail:
      return std::exp(-x / (2.0 * tau));
    case RadiusMode::LargeTau:
      return 0.9;
    case RadiusMode::Generic:
    default:
      return 0.5;
  }
}

RadiusMode choose_radius_mode(double x, double tau) {
  if (tau < 0.5) return RadiusMode::SmallTau;
  if (tau >= 5.0) return RadiusMode::LargeTau;
  if (x >= 4.0 * std::cbrt(tau) && std::exp(-x / (2.0 * tau)) < 0.5) return RadiusMode::Tail;
  return RadiusMode::Generic;
}

namespace {

constexpr long kFinestLevel = 1L << 20;
// Level-to-level changes below this multiple of the mean integrand magnitude are roundoff.
constexpr double kCancellationFloor = 1e-14;

struct NodeData {
  cplx z;
  Prefactors pre;
  BetheSet bethe;
  bool ready = false;
};

struct RadiusCache {
  std::map<long, NodeData> nodes;
};

std::mutex g_cache_mutex;
std::map<double, RadiusCache> g_cache;

RadiusCache& cache_for(double radius) {
  if (g_cache.size() > 64 && g_cache.find(radius) == g_cache.end()) g_cache.clear();
  return g_cache[radius];
}

enum class Flavor { Step, Flat };

struct Integrand {
  cplx full;       // e^{...} det(I - K)
  cplx prefactor;  // e^{...}
  cplx deficit;    // e^{...} (det(I - K) - 1)
  double magnitude;
  int K;
};

Integrand evaluate_node(NodeData& node, Flavor flavor, const ExponentParams& p) {
  if (!node.ready) {
    node.pre = prefactors(node.z);
    node.bethe = enumerate_roots(node.z, kDefaultTruncation);
    node.ready = true;
  }
  const bool flat = flavor == Flavor::Flat;
  node.bethe = adequate_roots(node.bethe, p, 1e-17, flat);
  const Prefactors& a = node.pre;
  CMatrix K;
  cplx exponent;
  if (flat) {
    K = build_flat_K1(node.bethe, p).matrix;
    exponent = p.x * a.A1 + p.tau * a.A2 + a.A3 + a.B;
  } else {
    K = build_step_Kz(node.bethe, p).matrix;
    exponent = p.x * a.A1 + p.tau * a.A2 + 2.0 * a.B;
  }
  const cplx pref = std::exp(exponent);
  const cplx dm1 = det_i_minus_minus_one(K);
  Integrand out;
  out.prefactor = pref;
  out.deficit = pref * dm1;
  out.full = pref * (1.0 + dm1);
  out.magnitude = std::abs(out.full);
  out.K = node.bethe.K;
  return out;
}

DistributionResult circle_sum(Flavor flavor, const ExponentParams& p, const CircleQuadrature& quad,
                              const CircleOptions& options, bool complement) {
  quad.validate();
  if (!(p.tau > 0.0)) throw DomainError("distribution requires tau > 0");
  if (options.M_cap < quad.M || options.M_cap > kFinestLevel) {
    throw DomainError("circle node cap out of range");
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  RadiusCache& cache = cache_for(quad.radius);

  auto level_sum = [&](int M, int& K_used, double& mean_abs) {
    CircleQuadrature q{quad.radius, M};
    const long stride = kFinestLevel / M;
    std::vector<NodeData*> slots(M);
    for (int j = 0; j < M; ++j) {
      NodeData& nd = cache.nodes[j * stride];
      nd.z = q.node(j);
      slots[j] = &nd;
    }
    std::vector<Integrand> values(M);
    parallel_for(M, [&](std::size_t j) { values[j] = evaluate_node(*slots[j], flavor, p); });
    cplx sum = 0.0;
    cplx pref_sum = 0.0;
    double abs_sum = 0.0;
    K_used = 0;
    for (const auto& v : values) {
      sum += complement ? v.deficit : v.full;
      pref_sum += v.prefactor;
      abs_sum += v.magnitude;
      K_used = std::max(K_used, v.K);
    }
    mean_abs = abs_sum / M;
    if (complement) return -(sum / static_cast<double>(M)) - (pref_sum / static_cast<double>(M) - 1.0);
    return sum / static_cast<double>(M);
  };

  int M = quad.M;
  int K_used = 0;
  double mean_abs = 0.0;
  cplx previous = level_sum(M, K_used, mean_abs);
  while (2 * M <= options.M_cap) {
    M *= 2;
    const cplx next = level_sum(M, K_used, mean_abs);
    const double change = std::abs(next - previous);
    if (change < std::max(options.tol, kCancellationFloor * mean_abs)) {
      DistributionResult r;
      r.value = next.real();
      r.imag_residual = next.imag();
      r.error_estimate = std::max(change, 1e-15 * mean_abs);
      r.diagnostics = {K_used, M, 0, quad.radius};
      return r;
    }
    previous = next;
  }
  throw ConvergenceError("circle quadrature did not stabilize before the node cap");
}

CircleQuadrature auto_quadrature(double x, double tau) {
  const RadiusMode mode = choose_radius_mode(x, tau);
  return {default_radius(mode, tau, x), kDefaultCircleNodes};
}

// det(I - A^2) (squared) or det(I - A) with A the Airy Nystrom matrix.
struct AiryDet {
  cplx det;
  cplx det_minus_one;
};

AiryDet airy_det(double x, int m, bool squared) {
  const HalfLineRule rule = half_line_rule(m, 1.0);
  const CMatrix A = build_airy_kernel(squared ? KernelKind::AirySquared : KernelKind::AirySingle, x,
                                      1.0, 0.0, rule);
  const CMatrix K = squared ? CMatrix(A * A) : A;
  const cplx dm1 = det_i_minus_minus_one(K);
  return {1.0 + dm1, dm1};
}

DistributionResult airy_distribution(double x, int m0, bool squared) {
  constexpr int kCap = 160;
  AiryDet previous = airy_det(x, m0, squared);
  int m = m0;
  double change = 0.0;
  while (2 * m <= kCap) {
    m *= 2;
    const AiryDet next = airy_det(x, m, squared);
    change = std::abs(next.det_minus_one - previous.det_minus_one);
    previous = next;
    if (change < 1e-13) break;
  }
  if (change > 1e-10) throw ConvergenceError("Airy determinant did not stabilize");
  DistributionResult r;
  r.value = previous.det.real();
  r.imag_residual = previous.det.imag();
  r.error_estimate = std::max(change, 1e-16);
  r.diagnostics = {0, 0, m, 0.0};
  return r;
}

double airy_complement(double x, bool squared) {
  const AiryDet a = airy_det(x, 80, squared);
  const AiryDet b = airy_det(x, 160, squared);
  if (std::abs(a.det_minus_one - b.det_minus_one) > 1e-3 * std::abs(b.det_minus_one) + 1e-300) {
    throw ConvergenceError("Airy determinant tail did not stabilize");
  }
  return -b.det_minus_one.real();
}

}  // namespace

DistributionResult F_step(double x, double tau, double gamma, const CircleQuadrature& quad,
                          const CircleOptions& options) {
  return circle_sum(Flavor::Step, {tau, gamma, x}, quad, options, false);
}

DistributionResult F_step(double x, double tau, double gamma) {
  CircleOptions options;
  return F_step(x, tau, gamma, auto_quadrature(x, tau), options);
}

DistributionResult one_minus_F_step(double x, double tau, double gamma,
                                    const CircleQuadrature& quad, const CircleOptions& options) {
  return circle_sum(Flavor::Step, {tau, gamma, x}, quad, options, true);
}

DistributionResult F_flat(double x, double tau, const CircleQuadrature& quad,
                          const CircleOptions& options) {
  return circle_sum(Flavor::Flat, {tau, 0.0, x}, quad, options, false);
}

DistributionResult F_flat(double x, double tau) {
  CircleOptions options;
  return F_flat(x, tau, auto_quadrature(x, tau), options);
}

DistributionResult one_minus_F_flat(double x, double tau, const CircleQuadrature& quad,
                                    const CircleOptions& options) {
  return circle_sum(Flavor::Flat, {tau, 0.0, x}, quad, options, true);
}

DistributionResult F_gue_result(double x, int m0) { return airy_distribution(x, m0, true); }
DistributionResult F_goe_result(double x, int m0) { return airy_distribution(x, m0, false); }
double F_gue(double x) { return F_gue_result(x).value; }
double F_goe(double x) { return F_goe_result(x).value; }
double one_minus_F_gue(double x) { return airy_complement(x, true); }
double one_minus_F_goe(double x) { return airy_complement(x, false); }

double F_kpz(double x, double tau, double gamma) {
  if (!(tau > 0.0)) throw DomainError("F_kpz requires tau > 0");
  const double c = std::cbrt(tau);
  return F_gue(x / c + gamma * gamma / (4.0 * c * c * c * c));
}

DistributionResult F_kpz_product(double x, double tau, double gamma, int m) {
  if (!(tau > 0.0)) throw DomainError("F_kpz_product requires tau > 0");
  const HalfLineRule rule = half_line_rule(m, 1.0);
  const CMatrix A = build_airy_kernel(KernelKind::AiryShifted, x, tau, -gamma, rule);
  const CMatrix B = build_airy_kernel(KernelKind::AiryShifted, x, tau, gamma, rule);
  const HalfLineRule coarse_rule = half_line_rule(m / 2, 1.0);
  const CMatrix Ac = build_airy_kernel(KernelKind::AiryShifted, x, tau, -gamma, coarse_rule);
  const CMatrix Bc = build_airy_kernel(KernelKind::AiryShifted, x, tau, gamma, coarse_rule);
  const cplx fine = det_i_minus(A * B).value;
  const cplx coarse = det_i_minus(Ac * Bc).value;
  DistributionResult r;
  r.value = fine.real();
  r.imag_residual = fine.imag();
  r.error_estimate = std::abs(fine - coarse);
  r.diagnostics = {0, 0, m, 0.0};
  return r;
}

double F_large_tau_integral(double x_scaled, double tau) {
  if (!(tau >= 5.0)) throw DomainError("F_large_tau_integral requires tau >= 5");
  constexpr double kRadius = 0.9;
  const double xhat = std::pow(kPi, 0.25) * x_scaled / kSqrt2;
  auto integrand = [&](double theta) {
    const cplx z = std::polar(kRadius, theta);
    const cplx u0 = -std::sqrt(-2.0 * std::log(z));
    if (std::abs(u0) < 1e-3) throw ContourError("large-tau contour passes too close to z = 1");
    const FF f = ff_from_coordinate(u0);
    const cplx value = EE_sheet_one(z) * std::exp(tau * f.f1 + std::sqrt(tau) * xhat * f.f2) /
                       (u0 * u0 * u0 * u0);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw ContourError("large-tau integrand is not finite on the contour");
    }
    return value;
  };
  double magnitude = 0.0;
  auto integral = [&](int panels) {
    const GaussRule rule = composite_rule(-kPi, kPi, panels, 20);
    std::vector<cplx> values(rule.x.size());
    parallel_for(values.size(), [&](std::size_t i) { values[i] = integrand(rule.x[i]); });
    cplx sum = 0.0;
    magnitude = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      sum += rule.w[i] * values[i];
      magnitude += rule.w[i] * std::abs(values[i]);
    }
    return sum;
  };
  cplx previous = integral(8);
  for (int panels = 16; panels <= 256; panels *= 2) {
    const cplx next = integral(panels);
    const double change = std::abs(next - previous);
    if (change < std::max(1e-11 * std::max(1.0, std::abs(next)), kCancellationFloor * magnitude)) {
      return 1.0 - (next / (8.0 * kPi)).real();
    }
    previous = next;
  }
  throw ConvergenceError("large-tau contour integral did not stabilize");
}

double gaussian_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

void clear_circle_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

}  // namespace relaxtime
