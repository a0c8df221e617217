#pragma once

#include <vector>

#include "relaxtime/common.hpp"

namespace relaxtime {

// Time, location and height parameters (tau > 0).
struct ExponentParams {
  double tau = 1.0;
  double gamma = 0.0;
  double x = 0.0;
};

struct BetheRoot {
  int k;
  cplx u;  // Bethe root, e^{-u^2/2} = z, Re u < 0
  cplx Q;  // Q(u)
};

// Truncated left-half-plane root set S_-(z) = { u_k : |k| <= K }.
struct BetheSet {
  cplx z;
  int K = 0;
  std::vector<BetheRoot> roots;  // ordered k = -K .. K

  std::size_t size() const { return roots.size(); }
  const BetheRoot& at_k(int k) const { return roots.at(static_cast<std::size_t>(k + K)); }
};

inline constexpr int kDefaultTruncation = 12;
inline constexpr int kMaxTruncation = 64;

// theta_0(z) = 2 arg z in (-2 pi, 2 pi]. On the negative axis the argument is +pi, or -pi
// (theta_0 = -2 pi) when lower_side is set.
double theta0(cplx z, bool lower_side = false);

// u_k = -(-2 log|z| + i theta_k)^{1/2}, theta_k = -theta_0 + 4 pi k.
cplx bethe_root(cplx z, int k, bool lower_side = false);

BetheSet enumerate_roots(cplx z, int K);

// Q(xi) by Gauss-Legendre quadrature of the imaginary-axis representation.
// Requires 3 pi / 4 < arg xi < 5 pi / 4.
cplx q_function(cplx xi);
// Same, with z = e^{-xi^2/2} supplied by the caller.
cplx q_function(cplx xi, cplx z);
// Q(xi) = sqrt(2/pi) int_{-inf}^{xi} Li_{1/2}(e^{-s^2/2}) ds along the ray through xi.
cplx q_function_direct(cplx xi);

// Phi(xi) = -tau xi^3 / 3 + x xi - Q(xi)
cplx exponent_phi(cplx xi, const ExponentParams& params);
cplx exponent_phi(cplx xi, cplx q_value, const ExponentParams& params);
// Psi(xi) = Phi(xi; 2x, 2tau) / 2 = -tau xi^3 / 3 + x xi - Q(xi) / 2
cplx exponent_psi(cplx xi, const ExponentParams& params);
cplx exponent_psi(cplx xi, cplx q_value, const ExponentParams& params);
// V(u) = -tau u^3 / 3 + gamma u^2 / 2 + x u
cplx exponent_v(cplx u, const ExponentParams& params);

// Largest of |e^{Phi/2 +- gamma u^2/4}| at the outermost roots divided by the
// largest over all roots.
double truncation_tail_ratio(const BetheSet& set, const ExponentParams& params);
// Same with e^{Psi} for the flat kernel.
double truncation_tail_ratio_flat(const BetheSet& set, const ExponentParams& params);

// Grows K in steps of 4 from set.K until the tail ratio is below tol or K reaches
// kMaxTruncation. Existing roots are reused.
BetheSet extend_roots(const BetheSet& set, int K);
BetheSet adequate_roots(const BetheSet& set, const ExponentParams& params, double tol = 1e-17,
                        bool flat = false);

}  // namespace relaxtime
