#pragma once

#include "relaxtime/common.hpp"

namespace relaxtime {

// Trapezoid rule on the circle |z| = radius with nodes z_j = radius e^{2 pi i j / M}.
// The node set at M is contained in the node set at 2M, so doubling M reuses work.
struct CircleQuadrature {
  double radius = 0.5;
  int M = 64;

  cplx node(int j) const;
  void validate() const;
};

inline constexpr int kDefaultCircleNodes = 64;
inline constexpr int kCircleNodeCap = 1024;
inline constexpr int kDefaultNystromNodes = 80;

enum class RadiusMode { Generic, SmallTau, Tail, LargeTau };

// 0.5 (Generic), e^{-1/(2 tau^{2/3})} (SmallTau), e^{-x/(2 tau)} (Tail), 0.9 (LargeTau).
double default_radius(RadiusMode mode, double tau, double x);
// Generic radius unless tau is small, large, or x sits far in the right tail.
RadiusMode choose_radius_mode(double x, double tau);

struct DistributionDiagnostics {
  int K = 0;  // largest Bethe truncation used at any node
  int M = 0;  // circle nodes in the final sum
  int m = 0;  // Nystrom nodes (Airy-type determinants)
  double radius = 0.0;
};

struct DistributionResult {
  double value = 0.0;
  double imag_residual = 0.0;
  double error_estimate = 0.0;
  DistributionDiagnostics diagnostics;
};

struct CircleOptions {
  int M_cap = kCircleNodeCap;
  double tol = 1e-11;
};

// F(x; tau, gamma) by the trapezoid rule over the circle. M doubles from quad.M until the
// change is below max(tol, 1e-14 * mean |integrand|); ConvergenceError if M_cap is reached first.
DistributionResult F_step(double x, double tau, double gamma, const CircleQuadrature& quad,
                          const CircleOptions& options = {});
DistributionResult F_step(double x, double tau, double gamma);

// 1 - F(x; tau, gamma) summed as -mean(e^{...} (det - 1)), accurate when F is close to 1.
DistributionResult one_minus_F_step(double x, double tau, double gamma,
                                    const CircleQuadrature& quad,
                                    const CircleOptions& options = {});

// Flat initial condition: e^{x A1 + tau A2 + A3 + B} det(I - K^{(1)}).
DistributionResult F_flat(double x, double tau, const CircleQuadrature& quad,
                          const CircleOptions& options = {});
DistributionResult F_flat(double x, double tau);
DistributionResult one_minus_F_flat(double x, double tau, const CircleQuadrature& quad,
                                    const CircleOptions& options = {});

// Tracy-Widom distributions as Fredholm determinants on (0, inf).
DistributionResult F_gue_result(double x, int m0 = 40);
DistributionResult F_goe_result(double x, int m0 = 40);
double F_gue(double x);
double F_goe(double x);
// 1 - F_GUE(x) and 1 - F_GOE(x) without cancellation.
double one_minus_F_gue(double x);
double one_minus_F_goe(double x);

// F_GUE(x / tau^{1/3} + gamma^2 / (4 tau^{4/3})).
double F_kpz(double x, double tau, double gamma);
// The same limit as det(I - A_{-gamma} A_gamma) with shifted Airy kernels.
DistributionResult F_kpz_product(double x, double tau, double gamma, int m = kDefaultNystromNodes);

// Large-tau reduction: 1 - (1/8 pi) int E e^{tau f1 + sqrt(tau) xhat f2} / u0^4 dtheta over
// |z| = 0.9, theta in (-pi, pi), xhat = pi^{1/4} x_scaled / sqrt(2). Requires tau >= 5.
double F_large_tau_integral(double x_scaled, double tau);

// Standard normal CDF.
double gaussian_cdf(double x);

// Empties the per-radius node cache (prefactors and Bethe roots).
void clear_circle_cache();

}  // namespace relaxtime
