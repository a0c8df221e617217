#pragma once

#include <vector>

#include "relaxtime/bethe.hpp"
#include "relaxtime/common.hpp"
#include "relaxtime/fredholm.hpp"
#include "relaxtime/quadrature.hpp"

namespace relaxtime {

enum class KernelKind {
  StepKz,
  TGammaProduct,
  FlatK1,
  IIKS_H,
  AirySquared,
  AirySingle,
  AiryShifted,
  AiryScaledTau
};

// Factor J of the step kernel, K_z = J J^T:
//   J(u_i, u_j) = exp((Phi_i + Phi_j)/2 + gamma (u_i^2 - u_j^2)/4)
//                 / (sqrt(-u_i) (u_i + u_j) sqrt(-u_j))
CMatrix step_J(const BetheSet& bethe, const ExponentParams& params);
// d/dx of J (entrywise (u_i + u_j)/2 J).
CMatrix step_J_dx(const BetheSet& bethe, const ExponentParams& params);

DiscreteOperator build_step_Kz(const BetheSet& bethe, const ExponentParams& params);

// T_gamma(y) = sum over S_- of e^{-tau xi^3/3 + gamma xi^2/2 + y xi - Q(xi)} / (-xi)
cplx calT(double gamma, double y, const BetheSet& bethe, double tau);
// y-derivative of calT, summed term by term.
cplx calT_dy(double gamma, double y, const BetheSet& bethe, double tau);

// Nystrom matrices A = D^{1/2} T_{-gamma}(s+x+t) D^{1/2}, B likewise with T_gamma;
// det(I - T_{-gamma} T_gamma) is det(I - A B).
struct TProductFactors {
  CMatrix A;
  CMatrix B;
};
TProductFactors build_T_product(const ExponentParams& params, const BetheSet& bethe,
                                const HalfLineRule& rule);
cplx det_T_product(const ExponentParams& params, const BetheSet& bethe, const HalfLineRule& rule);
// Kernel of T_{-gamma} T_gamma at (s, t) using the rule for the inner integral.
cplx T_product_kernel(double s, double t, const ExponentParams& params, const BetheSet& bethe,
                      const HalfLineRule& rule);

// Flat kernel, symmetrized: -e^{Psi_i + Psi_j} / (sqrt(-u_i) sqrt(-u_j) (u_i + u_j)).
DiscreteOperator build_flat_K1(const BetheSet& bethe, const ExponentParams& params);
// d/dx of the flat kernel.
CMatrix flat_K1_dx(const BetheSet& bethe, const ExponentParams& params);

// Integrable kernel on S = S_- followed by S_+ = -S_-.
struct IIKSOperator {
  std::vector<cplx> s;  // points
  Eigen::MatrixX2cd f;  // rows f(s)^T
  Eigen::MatrixX2cd g;  // rows g(s)^T
  CMatrix H;            // H(u, v) = f(u)^T g(v) / (u - v), zero diagonal
};
IIKSOperator build_H(const BetheSet& bethe, const ExponentParams& params);

// Shifted Airy function A_gamma(s; tau) = e^{gamma^3/(12 tau^2) + gamma s/(2 tau)} tau^{-1/3}
// Ai(s tau^{-1/3} + gamma^2 / (4 tau^{4/3})).
double shifted_airy(double gamma, double s, double tau);
double shifted_airy_ds(double gamma, double s, double tau);

// Ai(y) on the real line; zero beyond the double-precision underflow point.
double airy_kernel_value(double y);
double airy_kernel_derivative(double y);

// Nystrom matrices for the Airy-type kernels. For AirySquared and AirySingle the
// entries are Ai(x + s + t); for AiryShifted they are A_gamma(s + x + t; tau); for
// AiryScaledTau they are the Bethe sum tau^{1/3} sum e^{-tau xi^3/3 + tau^{1/3} xi
// (s + t + x) - Q(xi)} / (-xi) (bethe required).
CMatrix build_airy_kernel(KernelKind kind, double x, double tau, double gamma,
                          const HalfLineRule& rule, const BetheSet* bethe = nullptr);

}  // namespace relaxtime
