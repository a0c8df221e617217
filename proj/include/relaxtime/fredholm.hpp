#pragma once

#include <functional>

#include "relaxtime/common.hpp"
#include "relaxtime/quadrature.hpp"

namespace relaxtime {

struct DiscreteOperator {
  CMatrix matrix;
};

struct DetResult {
  cplx value;
  cplx log_value;      // log det(I - K), principal branch of each pivot summed
  double rcond = 0.0;  // reciprocal condition estimate of I - K
  double min_pivot = 0.0;
  bool singular_warning = false;  // some pivot below 1e-300 in magnitude
};

// det(I - K) by LU factorization.
DetResult det_discrete(const DiscreteOperator& op);
DetResult det_i_minus(const CMatrix& K);
// det(I - K) - 1 without cancellation when det is close to 1.
cplx det_i_minus_minus_one(const CMatrix& K);

using KernelFunction = std::function<cplx(double, double)>;

// Symmetrized Nystrom matrix D^{1/2} K D^{1/2}.
CMatrix nystrom_matrix(const KernelFunction& kernel, const HalfLineRule& rule);

struct HalfLineDet {
  cplx value;
  double error_estimate;  // |value(m) - value(m/2)|
  int m;
};

// det(I - D^{1/2} K D^{1/2}) at m nodes, with the m/2 value as error estimate.
HalfLineDet det_halfline(const KernelFunction& kernel, const HalfLineRule& rule);
// Doubles m from m0 until the change is below tol; ConvergenceError if the last
// doubling moves the value by more than 10 tol.
HalfLineDet det_halfline_converged(const KernelFunction& kernel, int m0 = 40, double c = 1.0,
                                   double tol = 1e-12, int m_cap = 320);

cplx trace_discrete(const DiscreteOperator& op);
cplx trace_halfline(const KernelFunction& kernel, const HalfLineRule& rule);

// d/dx log det(I - K(x)) = -Tr((I - K)^{-1} dK/dx)
cplx log_det_derivative(const CMatrix& K, const CMatrix& dK);

}  // namespace relaxtime
