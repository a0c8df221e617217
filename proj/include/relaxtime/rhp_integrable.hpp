#pragma once

#include <string>
#include <vector>

#include "relaxtime/bethe.hpp"
#include "relaxtime/common.hpp"
#include "relaxtime/kernels.hpp"

namespace relaxtime {

// Entries of X_1 = sum_s F(s) g(s)^T with F = (I - H)^{-1} f:
//   X_1 = [[q, p], [r, -q]].
struct X1Data {
  cplx q;
  cplx p;
  cplx r;
  cplx q22;  // assembled (2,2) entry, equal to -q
  ExponentParams params;
  cplx z;
  double rcond = 0.0;
  cplx log_det;  // log det(I - H)
};

// Solves (I - H) F = f on the truncated pole set S_- followed by S_+.
// NearSingularError if the reciprocal condition number of I - H is below 1e-12.
X1Data solve_X1(const BetheSet& bethe, const ExponentParams& params);

// Largest |R(s)^2| over the residue matrices R(s) = f(s) g(s)^T.
double nilpotency_defect(const IIKSOperator& op);

struct SymmetryDefect {
  double p_plus_r = 0.0;  // |p(gamma) + r(-gamma)|
  double q_diff = 0.0;    // |q(gamma) - q(-gamma)|
};
SymmetryDefect symmetry_check(const BetheSet& bethe, const ExponentParams& params);

// Finite-difference spacing shared by every variable. Residuals are evaluated at
// h, h/2, ..., h/2^(refinements - 1).
struct PDEStencil {
  double h = 0.08;
  int refinements = 3;
};

enum class PDEKind {
  MKdVp,         // 3 p_t + p_xxx + 6 p r p_x
  MKdVr,         // 3 r_t + r_xxx + 6 p r r_x
  Heatp,         // 2 p_g + p_xx + 2 p^2 r
  Heatr,         // 2 r_g - r_xx - 2 p r^2
  NonlocalMKdV,  // 3 p_t + p_xxx - 6 p(g) p(-g) p_x
  NonlocalHeat,  // 2 p_g + p_xx - 2 p(g)^2 p(-g)
  KPper,         // KP applied to u = p r
  KPkpz          // KP applied to the closed-form U_KPZ
};

std::string pde_name(PDEKind kind);

struct ResidualSeries {
  PDEKind kind;
  std::vector<double> h;
  std::vector<double> residual;  // normalized by the largest constituent term
  // residual[i] / residual[i + 1]
  std::vector<double> factors() const;
};

// Residual series for one equation at the center point, using the Bethe set of z.
ResidualSeries pde_residual(PDEKind kind, const BetheSet& bethe, const ExponentParams& center,
                            const PDEStencil& stencil = {});
// All periodic equations (everything but KPkpz).
std::vector<ResidualSeries> pde_residuals(const ExponentParams& center, cplx z,
                                          const PDEStencil& stencil = {});

// U_KPZ(tau, gamma, x) = d_xx log F_GUE(x / tau^{1/3} + gamma^2 / (4 tau^{4/3})) from
// trace formulas for the Airy determinant.
double u_kpz(double tau, double gamma, double x, int m = 80);
// d^2/ds^2 log F_GUE(s).
double log_gue_second_derivative(double s, int m = 80);
// u = p r from the RHP solution.
cplx u_per(const BetheSet& bethe, const ExponentParams& params);
// d_xx log det(I - K_z) from trace formulas for the discrete kernel.
cplx log_det_second_derivative(const BetheSet& bethe, const ExponentParams& params);

// Soliton controls in 50-digit arithmetic. The KP control is u = (c/4) sech^2(sqrt(c)(x -
// c tau / 12) / 2); the KdV control (3 u_t + u_xxx + 6 u u_x) is u = (c/2) sech^2(sqrt(c)(x -
// c tau / 3) / 2). Both return the normalized residual at spacing h.
double kp_soliton_residual(double c, double tau, double x, double h);
double kdv_soliton_residual(double c, double tau, double x, double h);

struct FlatCheck {
  cplx dlogdet;       // d_x log det(I - K^{(1)}|_{x/2, tau/2}) by finite differences
  cplx half_r_plus_q; // (R + Q) / 2 with R = X1 entry (1, 2) at gamma = 0
  cplx U;             // 2 d_xx log det(I - K^{(1)}|_{x/2, tau/2}) from trace formulas
  cplx miura;         // R_x - R^2
  std::vector<double> h;
  std::vector<double> mkdv_residual;  // 3 R_t + R_xxx - 6 R^2 R_x
  std::vector<double> kdv_residual;   // 3 U_t + U_xxx + 6 U U_x
};
FlatCheck flat_integrable_check(double tau, double x, cplx z, const PDEStencil& stencil = {});

// Flat-case determinant pieces at (tau, x): log det(I - K^{(1)}|_{x/2, tau/2}) and U.
cplx flat_log_det(const BetheSet& bethe, double tau, double x);
cplx flat_U(const BetheSet& bethe, double tau, double x);

}  // namespace relaxtime
