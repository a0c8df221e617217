#include "relaxtime/fredholm.hpp"

#include <cmath>
#include <limits>

namespace relaxtime {

DetResult det_i_minus(const CMatrix& K) {
  const Eigen::Index n = K.rows();
  if (K.cols() != n) throw DomainError("det: operator matrix must be square");
  DetResult out;
  if (n == 0) {
    out.value = 1.0;
    out.log_value = 0.0;
    out.rcond = 1.0;
    out.min_pivot = 1.0;
    return out;
  }
  if (!K.allFinite()) throw DomainError("det: operator has non-finite entries");
  const CMatrix A = CMatrix::Identity(n, n) - K;
  Eigen::PartialPivLU<CMatrix> lu(A);
  const CMatrix& LU = lu.matrixLU();
  cplx log_det = 0.0;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx d = LU(i, i);
    min_pivot = std::min(min_pivot, std::abs(d));
    log_det += std::log(d);
  }
  const int sign = lu.permutationP().determinant();
  if (sign < 0) log_det += cplx(0.0, kPi);
  out.log_value = log_det;
  out.value = lu.determinant();
  out.rcond = lu.rcond();
  out.min_pivot = min_pivot;
  out.singular_warning = min_pivot < 1e-300;
  return out;
}

DetResult det_discrete(const DiscreteOperator& op) { return det_i_minus(op.matrix); }

cplx det_i_minus_minus_one(const CMatrix& K) {
  cplx w;
  const double norm = K.norm();
  if (norm < 0.5) {
    // log det(I - K) = -sum_n tr(K^n) / n, summed in matrix powers so that small K keeps
    // its relative accuracy.
    CMatrix power = K;
    w = -power.trace();
    for (int n = 2; n <= 200; ++n) {
      power = power * K;
      const cplx term = -power.trace() / static_cast<double>(n);
      w += term;
      if (2.0 * std::pow(norm, n + 1) <= 1e-17 * std::abs(w)) break;
    }
  } else {
    w = det_i_minus(K).log_value;
  }
  // expm1 for complex argument: e^w - 1 = expm1(a) cos b - 2 sin^2(b/2) + i e^a sin b
  const double a = w.real();
  const double b = w.imag();
  const double sb2 = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2, std::exp(a) * std::sin(b)};
}

CMatrix nystrom_matrix(const KernelFunction& kernel, const HalfLineRule& rule) {
  const int m = rule.m;
  CMatrix A(m, m);
  for (int i = 0; i < m; ++i) {
    const double si = std::sqrt(rule.w[i]);
    for (int j = 0; j < m; ++j) {
      A(i, j) = si * kernel(rule.t[i], rule.t[j]) * std::sqrt(rule.w[j]);
    }
  }
  return A;
}

HalfLineDet det_halfline(const KernelFunction& kernel, const HalfLineRule& rule) {
  const cplx full = det_i_minus(nystrom_matrix(kernel, rule)).value;
  const int half = std::max(1, rule.m / 2);
  const cplx coarse = det_i_minus(nystrom_matrix(kernel, half_line_rule(half, rule.c))).value;
  return {full, std::abs(full - coarse), rule.m};
}

HalfLineDet det_halfline_converged(const KernelFunction& kernel, int m0, double c, double tol,
                                   int m_cap) {
  cplx previous = det_i_minus(nystrom_matrix(kernel, half_line_rule(m0, c))).value;
  double change = 0.0;
  int m = m0;
  while (m * 2 <= m_cap) {
    m *= 2;
    const cplx next = det_i_minus(nystrom_matrix(kernel, half_line_rule(m, c))).value;
    change = std::abs(next - previous);
    previous = next;
    if (change < tol) return {next, change, m};
  }
  if (change > 10.0 * tol) throw ConvergenceError("det_halfline: node doubling did not stabilize");
  return {previous, change, m};
}

cplx trace_discrete(const DiscreteOperator& op) { return op.matrix.trace(); }

cplx trace_halfline(const KernelFunction& kernel, const HalfLineRule& rule) {
  cplx sum = 0.0;
  for (int i = 0; i < rule.m; ++i) sum += rule.w[i] * kernel(rule.t[i], rule.t[i]);
  return sum;
}

cplx log_det_derivative(const CMatrix& K, const CMatrix& dK) {
  const Eigen::Index n = K.rows();
  const CMatrix A = CMatrix::Identity(n, n) - K;
  const CMatrix X = A.partialPivLu().solve(dK);
  return -X.trace();
}

}  // namespace relaxtime
