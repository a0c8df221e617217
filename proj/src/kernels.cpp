#include "relaxtime/kernels.hpp"

#include <cmath>

#include "relaxtime/special_functions.hpp"

namespace relaxtime {

namespace {

constexpr double kAiryUnderflow = 100.0;

std::vector<cplx> phi_values(const BetheSet& bethe, const ExponentParams& p) {
  std::vector<cplx> phi(bethe.size());
  for (std::size_t i = 0; i < bethe.size(); ++i) {
    phi[i] = exponent_phi(bethe.roots[i].u, bethe.roots[i].Q, p);
  }
  return phi;
}

// Coefficients a_k = e^{-tau u^3/3 + gamma u^2/2 - Q} / (-u) of calT.
std::vector<cplx> calT_coefficients(double gamma, const BetheSet& bethe, double tau) {
  std::vector<cplx> a(bethe.size());
  for (std::size_t k = 0; k < bethe.size(); ++k) {
    const cplx u = bethe.roots[k].u;
    a[k] = std::exp(-tau * u * u * u / 3.0 + 0.5 * gamma * u * u - bethe.roots[k].Q) / (-u);
  }
  return a;
}

cplx calT_from(const std::vector<cplx>& a, const BetheSet& bethe, double y) {
  cplx sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * std::exp(y * bethe.roots[k].u);
  return sum;
}

CMatrix calT_nystrom(double gamma, double x, const BetheSet& bethe, double tau,
                     const HalfLineRule& rule) {
  const std::vector<cplx> a = calT_coefficients(gamma, bethe, tau);
  const int m = rule.m;
  CMatrix A(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const cplx v = std::sqrt(rule.w[i] * rule.w[j]) * calT_from(a, bethe, rule.t[i] + x + rule.t[j]);
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

}  // namespace

CMatrix step_J(const BetheSet& bethe, const ExponentParams& p) {
  const std::size_t n = bethe.size();
  const std::vector<cplx> phi = phi_values(bethe, p);
  CMatrix J(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx ui = bethe.roots[i].u;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx uj = bethe.roots[j].u;
      J(i, j) = std::exp(0.5 * (phi[i] + phi[j]) + 0.25 * p.gamma * (ui * ui - uj * uj)) /
                (std::sqrt(-ui) * (ui + uj) * std::sqrt(-uj));
    }
  }
  return J;
}

CMatrix step_J_dx(const BetheSet& bethe, const ExponentParams& p) {
  CMatrix J = step_J(bethe, p);
  for (Eigen::Index i = 0; i < J.rows(); ++i) {
    for (Eigen::Index j = 0; j < J.cols(); ++j) {
      J(i, j) *= 0.5 * (bethe.roots[i].u + bethe.roots[j].u);
    }
  }
  return J;
}

DiscreteOperator build_step_Kz(const BetheSet& bethe, const ExponentParams& p) {
  const CMatrix J = step_J(bethe, p);
  return {J * J.transpose()};
}

cplx calT(double gamma, double y, const BetheSet& bethe, double tau) {
  return calT_from(calT_coefficients(gamma, bethe, tau), bethe, y);
}

cplx calT_dy(double gamma, double y, const BetheSet& bethe, double tau) {
  const std::vector<cplx> a = calT_coefficients(gamma, bethe, tau);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const cplx u = bethe.roots[k].u;
    sum += a[k] * u * std::exp(y * u);
  }
  return sum;
}

TProductFactors build_T_product(const ExponentParams& p, const BetheSet& bethe,
                                const HalfLineRule& rule) {
  return {calT_nystrom(-p.gamma, p.x, bethe, p.tau, rule),
          calT_nystrom(p.gamma, p.x, bethe, p.tau, rule)};
}

cplx det_T_product(const ExponentParams& p, const BetheSet& bethe, const HalfLineRule& rule) {
  const TProductFactors f = build_T_product(p, bethe, rule);
  return det_i_minus(f.A * f.B).value;
}

cplx T_product_kernel(double s, double t, const ExponentParams& p, const BetheSet& bethe,
                      const HalfLineRule& rule) {
  const std::vector<cplx> am = calT_coefficients(-p.gamma, bethe, p.tau);
  const std::vector<cplx> ap = calT_coefficients(p.gamma, bethe, p.tau);
  cplx sum = 0.0;
  for (int l = 0; l < rule.m; ++l) {
    sum += rule.w[l] * calT_from(am, bethe, s + p.x + rule.t[l]) *
           calT_from(ap, bethe, rule.t[l] + p.x + t);
  }
  return sum;
}

DiscreteOperator build_flat_K1(const BetheSet& bethe, const ExponentParams& p) {
  const std::size_t n = bethe.size();
  std::vector<cplx> psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = exponent_psi(bethe.roots[i].u, bethe.roots[i].Q, p);
  CMatrix K(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx ui = bethe.roots[i].u;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx uj = bethe.roots[j].u;
      K(i, j) = -std::exp(psi[i] + psi[j]) / (std::sqrt(-ui) * std::sqrt(-uj) * (ui + uj));
    }
  }
  return {K};
}

CMatrix flat_K1_dx(const BetheSet& bethe, const ExponentParams& p) {
  CMatrix K = build_flat_K1(bethe, p).matrix;
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    for (Eigen::Index j = 0; j < K.cols(); ++j) {
      K(i, j) *= bethe.roots[i].u + bethe.roots[j].u;
    }
  }
  return K;
}

IIKSOperator build_H(const BetheSet& bethe, const ExponentParams& p) {
  const std::size_t n = bethe.size();
  const std::size_t N = 2 * n;
  IIKSOperator op;
  op.s.resize(N);
  op.f = Eigen::MatrixX2cd::Zero(N, 2);
  op.g = Eigen::MatrixX2cd::Zero(N, 2);
  for (std::size_t i = 0; i < N; ++i) {
    const bool minus = i < n;
    const BetheRoot& r = bethe.roots[minus ? i : i - n];
    const cplx s = minus ? r.u : -r.u;
    const cplx qs = minus ? r.Q : -r.Q;
    const cplx V = exponent_v(s, p);
    op.s[i] = s;
    if (minus) {
      const cplx e = std::exp(0.5 * V - 0.5 * qs) / std::sqrt(-s);
      op.f(i, 1) = e;
      op.g(i, 0) = -e;
    } else {
      const cplx e = std::exp(-0.5 * V + 0.5 * qs) / std::sqrt(s);
      op.f(i, 0) = e;
      op.g(i, 1) = e;
    }
  }
  op.H = op.f * op.g.transpose();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) {
        op.H(i, j) = 0.0;
      } else {
        op.H(i, j) /= (op.s[i] - op.s[j]);
      }
    }
  }
  return op;
}

double airy_kernel_value(double y) {
  if (y > kAiryUnderflow) return 0.0;
  return airy(y);
}

double airy_kernel_derivative(double y) {
  if (y > kAiryUnderflow) return 0.0;
  return airy_pair_real(y).aip.real();
}

double shifted_airy(double gamma, double s, double tau) {
  const double c = std::cbrt(tau);
  const double arg = s / c + gamma * gamma / (4.0 * c * c * c * c);
  if (arg > kAiryUnderflow) return 0.0;
  return std::exp(gamma * gamma * gamma / (12.0 * tau * tau) + gamma * s / (2.0 * tau)) / c *
         airy(arg);
}

double shifted_airy_ds(double gamma, double s, double tau) {
  const double c = std::cbrt(tau);
  const double arg = s / c + gamma * gamma / (4.0 * c * c * c * c);
  if (arg > kAiryUnderflow) return 0.0;
  const AiryPair a = airy_pair_real(arg);
  const double pre = std::exp(gamma * gamma * gamma / (12.0 * tau * tau) + gamma * s / (2.0 * tau)) / c;
  return pre * (gamma / (2.0 * tau) * a.ai.real() + a.aip.real() / c);
}

CMatrix build_airy_kernel(KernelKind kind, double x, double tau, double gamma,
                          const HalfLineRule& rule, const BetheSet* bethe) {
  const int m = rule.m;
  CMatrix A(m, m);
  std::vector<cplx> coeff;
  double c = 1.0;
  if (kind == KernelKind::AiryScaledTau) {
    if (bethe == nullptr) throw DomainError("AiryScaledTau kernel needs a Bethe set");
    c = std::cbrt(tau);
    coeff = calT_coefficients(0.0, *bethe, tau);
  } else if (kind != KernelKind::AirySquared && kind != KernelKind::AirySingle &&
             kind != KernelKind::AiryShifted) {
    throw DomainError("build_airy_kernel: not an Airy-type kernel");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const double y = rule.t[i] + x + rule.t[j];
      cplx v;
      switch (kind) {
        case KernelKind::AiryShifted:
          v = shifted_airy(gamma, y, tau);
          break;
        case KernelKind::AiryScaledTau:
          v = c * calT_from(coeff, *bethe, c * y);
          break;
        default:
          v = airy_kernel_value(y);
          break;
      }
      v *= std::sqrt(rule.w[i] * rule.w[j]);
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

}  // namespace relaxtime
