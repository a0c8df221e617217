#pragma once

#include "relaxtime/bethe.hpp"
#include "relaxtime/common.hpp"

namespace relaxtime {

struct TailParams {
  double tau = 1.0;
  double gamma = 0.0;  // in [-1/2, 1/2]
  double x = 4.0;
  double alpha = 0.0;
  bool flat = false;
};

// Tail values of 1 - F below this floor are not resolved by the determinants.
inline constexpr double kOneMinusFFloor = 1e-8;

// B(x; alpha) = int_x^inf (y - x) e^{alpha y} Ai(y)^2 dy. Requires x >= 1.
double calB(double x, double alpha = 0.0);

// Airy-like function A(y; mu) = (1 / 2 pi i) int e^{-tau xi^3/3 + mu xi^2/2 + y xi - Q(xi)} dxi
// on the contour xi = s w + mu / (2 tau), s = sqrt((y + mu^2/(4 tau)) / tau), with w on
// {-1 + b i : |b| <= 0.2} joined to the hyperbola a^2 - b^2 = -1.45 a - 0.49, a <= -1.
// With include_q = false the Q term is dropped.
double airy_like_A(double y, double mu, double tau, bool include_q = true);
// e^{mu^3/(12 tau^2) + mu y/(2 tau)} tau^{-1/3} Ai(y / tau^{1/3} + mu^2 / (4 tau^{4/3})).
double airy_like_closed_form(double y, double mu, double tau);
// Leading large-y asymptotic formula for A(y; mu).
double airy_like_asymptotic(double y, double mu, double tau);

struct TailRatio {
  double ratio = 0.0;
  double expected = 1.0;
  double one_minus_F = 0.0;
  double one_minus_reference = 0.0;
};

// (1 - F(x; tau, gamma)) / (1 - F_GUE(x / tau^{1/3} + gamma^2 / (4 tau^{4/3}))), or for the
// flat case (1 - F_1(x; tau)) / (1 - F_GOE(2^{2/3} x / tau^{1/3})). The circle radius is
// e^{-x / (2 tau)}. PrecisionError if 1 - F is below kOneMinusFFloor.
TailRatio tail_ratio(const TailParams& params);

// b(tau, gamma, x) = B(x / tau^{1/3} + gamma^2 / (4 tau^{4/3}); 0) and the shifted values
// b_+- = B(same; +-1 / (2 tau^{2/3})).
struct TailTraceReference {
  double b = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
};
TailTraceReference tail_trace_reference(double x, double tau, double gamma);

// Laurent coefficients in z of Tr(T_{-gamma} T_gamma) on |z| = e^{-x / (2 tau)}, by the
// discrete Fourier transform over M circle nodes.
struct TraceLaurent {
  cplx c_minus1;
  cplx c0;
  cplx c_plus1;
};
TraceLaurent trace_laurent(double x, double tau, double gamma, int M = 64);

// Discretized Hilbert-Schmidt norm int_x^inf (y - x) |T_gamma(y)|^2 dy.
double hs_norm_squared(double x, double tau, double gamma, const BetheSet& bethe);

// K(y) = floor((19/12) sqrt(tau y)).
int tail_truncation_index(double y, double tau);

// |T_gamma(y) - sum_{k=-K(y)}^{inf} z^{-k} A(y; gamma - k)|, with the infinite sum cut when
// its terms fall below 1e-18 of the running total.
double tail_series_remainder(double y, double tau, double gamma, const BetheSet& bethe);

}  // namespace relaxtime
