#pragma once

#include <optional>
#include <string>
#include <vector>

namespace relaxtime {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values and thresholds
};

bool all_pass(const std::vector<CheckResult>& checks);

// Verification batteries. Each returns one entry per check with the measured values.
// Operator identities at pseudo-random parameter points (seeded).
std::vector<CheckResult> check_operator_identities(unsigned seed = 20240501u, int points = 5);
// Monotonicity, gamma-periodicity, radius independence and imaginary residuals of F.
std::vector<CheckResult> check_cdf_properties();
// Small-tau approach to F_GUE.
std::vector<CheckResult> check_small_tau();
// Large-tau approach to the normal distribution (step and flat) and the contour reduction.
std::vector<CheckResult> check_large_tau();
// Right-tail ratios at tau = 1. With gamma set, only that gamma (and no flat case) is run.
std::vector<CheckResult> check_right_tail(std::optional<double> gamma = std::nullopt);
// B(x; 0) asymptotics and the Airy-like function against Ai.
std::vector<CheckResult> check_tail_oracles();
// Laurent coefficients of the gamma = 1/2 trace against the B pattern.
std::vector<CheckResult> check_tail_trace();
// RHP identities, symmetry, and PDE residual convergence (periodic and KPZ).
std::vector<CheckResult> check_integrable_periodic();
// Flat-case identity, Miura map, and mKdV/KdV residual convergence.
std::vector<CheckResult> check_integrable_flat();
// Soliton controls in extended precision.
std::vector<CheckResult> check_soliton_controls();
// Riemann-surface constants and the maximum of re f1 on gamma_1.
std::vector<CheckResult> check_riemann_surface();

struct SuiteOptions {
  std::optional<double> gamma;
};

// Suite names: identities, cdf, small-tau, large-tau, tails, pde, flat, surface.
const std::vector<std::string>& suite_names();
// DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options = {});

}  // namespace relaxtime
