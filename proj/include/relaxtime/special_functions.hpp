#pragma once

#include "relaxtime/common.hpp"

namespace relaxtime {

// Order s = twice_s / 2 of a half-integer polylogarithm.
struct PolylogOrder {
  int twice_s;
  constexpr double s() const { return 0.5 * twice_s; }
};

inline constexpr PolylogOrder kLiHalf{1};
inline constexpr PolylogOrder kLiThreeHalves{3};
inline constexpr PolylogOrder kLiFiveHalves{5};

// Evaluation method used by polylog():
//   InnerDisk  power series, |z| <= 0.6
//   NearOne    expansion in powers of mu = log z, |mu| <= 3.5
//   CutPlane   integral representation, remaining z off [1, inf)
enum class EvalDomainTag { InnerDisk, CutPlane, NearOne };

inline constexpr double kInnerDiskRadius = 0.6;
inline constexpr double kLogExpansionRadius = 3.5;

EvalDomainTag select_polylog_domain(cplx z);

// Li_s(z) for s in {1/2, 3/2, 5/2}, z off the cut [1, inf).
cplx polylog(PolylogOrder s, cplx z);

// Li_s(z) with a forced evaluation method (used to check agreement between methods).
cplx polylog_with(PolylogOrder s, cplx z, EvalDomainTag method);

// Gamma(1 - s) for the supported orders.
double gamma_one_minus_s(PolylogOrder s);

// Regular part of the expansion about z = 1:
//   Li_s(e^mu) - Gamma(1-s) (-mu)^(s-1) = sum_k zeta(s-k) mu^k / k!,  |mu| < 2 pi.
cplx polylog_regular_part(PolylogOrder s, cplx mu);

// Airy function Ai(x) and its derivative, by contour quadrature. |x| <= 1000.
struct AiryPair {
  cplx ai;
  cplx aip;
};
AiryPair airy_pair(cplx x);
cplx airy(cplx x);
double airy(double x);
AiryPair airy_pair_real(double x);

// Prefactor functions.
//   A1 = -Li_{3/2}(z)/sqrt(2 pi), A2 = -Li_{5/2}(z)/sqrt(2 pi), A3 = -log(1-z)/4,
//   B  = (1/4 pi) int_0^z Li_{1/2}(y)^2 / y dy along the straight segment.
struct Prefactors {
  cplx A1;
  cplx A2;
  cplx A3;
  cplx B;
};
Prefactors prefactors(cplx z);

// B(z) with an explicit number of Gauss-Legendre nodes per graded panel.
cplx b_function(cplx z, int nodes_per_panel = 20);

}  // namespace relaxtime
