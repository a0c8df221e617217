#include "relaxtime/rhp_integrable.hpp"

#include <array>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "relaxtime/fredholm.hpp"
#include "relaxtime/quadrature.hpp"
#include "relaxtime/special_functions.hpp"
#include "relaxtime/stencils.hpp"

namespace relaxtime {

X1Data solve_X1(const BetheSet& bethe, const ExponentParams& params) {
  const IIKSOperator op = build_H(bethe, params);
  const Eigen::Index n = op.H.rows();
  const CMatrix A = CMatrix::Identity(n, n) - op.H;
  const Eigen::PartialPivLU<CMatrix> lu(A);
  X1Data out;
  out.rcond = lu.rcond();
  if (!(out.rcond >= 1e-12)) throw NearSingularError("solve_X1: I - H is numerically singular");
  const Eigen::MatrixX2cd F = lu.solve(op.f);
  const Eigen::Matrix2cd X = F.transpose() * op.g;
  out.q = X(0, 0);
  out.p = X(0, 1);
  out.r = X(1, 0);
  out.q22 = X(1, 1);
  out.params = params;
  out.z = bethe.z;
  out.log_det = det_i_minus(op.H).log_value;
  return out;
}

double nilpotency_defect(const IIKSOperator& op) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < op.f.rows(); ++i) {
    const Eigen::Matrix2cd R = op.f.row(i).transpose() * op.g.row(i);
    worst = std::max(worst, (R * R).cwiseAbs().maxCoeff());
  }
  return worst;
}

SymmetryDefect symmetry_check(const BetheSet& bethe, const ExponentParams& params) {
  ExponentParams flipped = params;
  flipped.gamma = -params.gamma;
  const X1Data a = solve_X1(bethe, params);
  const X1Data b = solve_X1(bethe, flipped);
  return {std::abs(a.p + b.r), std::abs(a.q - b.q)};
}

std::string pde_name(PDEKind kind) {
  switch (kind) {
    case PDEKind::MKdVp:
      return "mkdv-p";
    case PDEKind::MKdVr:
      return "mkdv-r";
    case PDEKind::Heatp:
      return "heat-p";
    case PDEKind::Heatr:
      return "heat-r";
    case PDEKind::NonlocalMKdV:
      return "nonlocal-mkdv";
    case PDEKind::NonlocalHeat:
      return "nonlocal-heat";
    case PDEKind::KPper:
      return "kp-per";
    case PDEKind::KPkpz:
      return "kp-kpz";
  }
  return "unknown";
}

std::vector<double> ResidualSeries::factors() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < residual.size(); ++i) out.push_back(residual[i] / residual[i + 1]);
  return out;
}

namespace {

using stencil::d1;
using stencil::d2;
using stencil::d3;
using stencil::normalized_residual;

double periodic_residual(PDEKind kind, const BetheSet& bethe, const ExponentParams& c, double h) {
  auto solve = [&](double t, double g, double x) { return solve_X1(bethe, {t, g, x}); };
  auto P = [&](double t, double g, double x) { return solve(t, g, x).p; };
  auto R = [&](double t, double g, double x) { return solve(t, g, x).r; };
  const X1Data here = solve(c.tau, c.gamma, c.x);
  const cplx p = here.p;
  const cplx r = here.r;
  auto dt = [&](auto F) { return d1([&](double e) { return F(c.tau + e, c.gamma, c.x); }, h); };
  auto dg = [&](auto F) { return d1([&](double e) { return F(c.tau, c.gamma + e, c.x); }, h); };
  auto dx = [&](auto F) { return d1([&](double e) { return F(c.tau, c.gamma, c.x + e); }, h); };
  auto dxx = [&](auto F) { return d2([&](double e) { return F(c.tau, c.gamma, c.x + e); }, h); };
  auto dxxx = [&](auto F) { return d3([&](double e) { return F(c.tau, c.gamma, c.x + e); }, h); };
  switch (kind) {
    case PDEKind::MKdVp:
      return normalized_residual(std::array<cplx, 3>{3.0 * dt(P), dxxx(P), 6.0 * p * r * dx(P)});
    case PDEKind::MKdVr:
      return normalized_residual(std::array<cplx, 3>{3.0 * dt(R), dxxx(R), 6.0 * p * r * dx(R)});
    case PDEKind::Heatp:
      return normalized_residual(std::array<cplx, 3>{2.0 * dg(P), dxx(P), 2.0 * p * p * r});
    case PDEKind::Heatr:
      return normalized_residual(std::array<cplx, 3>{2.0 * dg(R), -dxx(R), -2.0 * p * r * r});
    case PDEKind::NonlocalMKdV: {
      const cplx pm = solve(c.tau, -c.gamma, c.x).p;
      return normalized_residual(std::array<cplx, 3>{3.0 * dt(P), dxxx(P), -6.0 * p * pm * dx(P)});
    }
    case PDEKind::NonlocalHeat: {
      const cplx pm = solve(c.tau, -c.gamma, c.x).p;
      return normalized_residual(std::array<cplx, 3>{2.0 * dg(P), dxx(P), -2.0 * p * p * pm});
    }
    case PDEKind::KPper: {
      auto u = [&](double t, double g, double x) {
        const X1Data d = solve(t, g, x);
        return d.p * d.r;
      };
      return normalized_residual(stencil::kp_terms(u, c.tau, c.gamma, c.x, h));
    }
    case PDEKind::KPkpz: {
      auto u = [&](double t, double g, double x) { return u_kpz(t, g, x); };
      return normalized_residual(stencil::kp_terms(u, c.tau, c.gamma, c.x, h));
    }
  }
  throw DomainError("pde_residual: unknown equation");
}

// -d^2/dx^2 log det(I - K) = Tr(R K'') + Tr(R K' R K') with R = (I - K)^{-1}.
cplx second_log_derivative(const CMatrix& K, const CMatrix& K1, const CMatrix& K2) {
  const Eigen::Index n = K.rows();
  const Eigen::PartialPivLU<CMatrix> lu(CMatrix::Identity(n, n) - K);
  const CMatrix RK1 = lu.solve(K1);
  const CMatrix RK2 = lu.solve(K2);
  return -(RK2.trace() + (RK1 * RK1).trace());
}

}  // namespace

ResidualSeries pde_residual(PDEKind kind, const BetheSet& bethe, const ExponentParams& center,
                            const PDEStencil& stencil) {
  if (!(stencil.h > 0.0) || stencil.refinements < 1) throw GridError("pde_residual: bad stencil");
  ResidualSeries out;
  out.kind = kind;
  double h = stencil.h;
  for (int i = 0; i < stencil.refinements; ++i, h *= 0.5) {
    double value;
    try {
      value = periodic_residual(kind, bethe, center, h);
    } catch (const NearSingularError&) {
      throw GridError("pde_residual: a stencil point is near-singular");
    }
    out.h.push_back(h);
    out.residual.push_back(value);
  }
  return out;
}

std::vector<ResidualSeries> pde_residuals(const ExponentParams& center, cplx z,
                                          const PDEStencil& stencil) {
  const BetheSet bethe = adequate_roots(enumerate_roots(z, kDefaultTruncation), center);
  std::vector<ResidualSeries> out;
  for (PDEKind kind : {PDEKind::MKdVp, PDEKind::MKdVr, PDEKind::Heatp, PDEKind::Heatr,
                       PDEKind::NonlocalMKdV, PDEKind::NonlocalHeat, PDEKind::KPper}) {
    out.push_back(pde_residual(kind, bethe, center, stencil));
  }
  return out;
}

double log_gue_second_derivative(double s, int m) {
  const HalfLineRule rule = half_line_rule(m, 1.0);
  CMatrix A(m, m), A1(m, m), A2(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const double y = s + rule.t[i] + rule.t[j];
      const double wt = std::sqrt(rule.w[i] * rule.w[j]);
      double ai = 0.0, aip = 0.0;
      if (y <= 100.0) {
        const AiryPair pair = airy_pair_real(y);
        ai = pair.ai.real();
        aip = pair.aip.real();
      }
      A(i, j) = A(j, i) = wt * ai;
      A1(i, j) = A1(j, i) = wt * aip;
      A2(i, j) = A2(j, i) = wt * y * ai;
    }
  }
  const CMatrix K = A * A;
  const CMatrix K1 = A1 * A + A * A1;
  const CMatrix K2 = A2 * A + 2.0 * A1 * A1 + A * A2;
  return second_log_derivative(K, K1, K2).real();
}

double u_kpz(double tau, double gamma, double x, int m) {
  if (!(tau > 0.0)) throw DomainError("u_kpz requires tau > 0");
  const double c = std::cbrt(tau);
  return log_gue_second_derivative(x / c + gamma * gamma / (4.0 * c * c * c * c), m) / (c * c);
}

cplx u_per(const BetheSet& bethe, const ExponentParams& params) {
  const X1Data d = solve_X1(bethe, params);
  return d.p * d.r;
}

cplx log_det_second_derivative(const BetheSet& bethe, const ExponentParams& params) {
  const CMatrix J = step_J(bethe, params);
  const Eigen::Index n = J.rows();
  CMatrix J1(n, n), J2(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx half = 0.5 * (bethe.roots[i].u + bethe.roots[j].u);
      J1(i, j) = half * J(i, j);
      J2(i, j) = half * half * J(i, j);
    }
  }
  const CMatrix K = J * J.transpose();
  const CMatrix K1 = J1 * J.transpose() + J * J1.transpose();
  const CMatrix K2 = J2 * J.transpose() + 2.0 * J1 * J1.transpose() + J * J2.transpose();
  return second_log_derivative(K, K1, K2);
}

namespace {

using Mp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                         boost::multiprecision::et_off>;

Mp sech2(const Mp& v) {
  const Mp ch = cosh(v);
  return 1 / (ch * ch);
}

}  // namespace

double kp_soliton_residual(double c, double tau, double x, double h) {
  const Mp cm(c);
  const Mp k = sqrt(cm) / 2;
  auto u = [&](const Mp& t, const Mp& /*g*/, const Mp& xx) {
    return Mp(cm / 4 * sech2(k * (xx - cm * t / 12)));
  };
  const auto terms = stencil::kp_terms(u, Mp(tau), Mp(0), Mp(x), Mp(h));
  return static_cast<double>(normalized_residual(terms));
}

double kdv_soliton_residual(double c, double tau, double x, double h) {
  const Mp cm(c);
  const Mp k = sqrt(cm) / 2;
  auto u = [&](const Mp& t, const Mp& xx) { return Mp(cm / 2 * sech2(k * (xx - cm * t / 3))); };
  const auto terms = stencil::kdv_terms(u, Mp(tau), Mp(x), Mp(h));
  return static_cast<double>(normalized_residual(terms));
}

cplx flat_log_det(const BetheSet& bethe, double tau, double x) {
  return det_discrete(build_flat_K1(bethe, {0.5 * tau, 0.0, 0.5 * x})).log_value;
}

cplx flat_U(const BetheSet& bethe, double tau, double x) {
  const CMatrix K = build_flat_K1(bethe, {0.5 * tau, 0.0, 0.5 * x}).matrix;
  const Eigen::Index n = K.rows();
  CMatrix K1(n, n), K2(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx half = 0.5 * (bethe.roots[i].u + bethe.roots[j].u);
      K1(i, j) = half * K(i, j);
      K2(i, j) = half * half * K(i, j);
    }
  }
  return 2.0 * second_log_derivative(K, K1, K2);
}

FlatCheck flat_integrable_check(double tau, double x, cplx z, const PDEStencil& stencil) {
  const ExponentParams center{tau, 0.0, x};
  const BetheSet bethe = adequate_roots(enumerate_roots(z, kDefaultTruncation), center);
  auto Rf = [&](double t, double xx) { return solve_X1(bethe, {t, 0.0, xx}).p; };
  auto Uf = [&](double t, double xx) { return flat_U(bethe, t, xx); };
  FlatCheck out;
  const double hd = 1e-2;
  auto ld = [&](double e) { return flat_log_det(bethe, tau, x + e); };
  out.dlogdet = (ld(-2 * hd) - 8.0 * ld(-hd) + 8.0 * ld(hd) - ld(2 * hd)) / (12.0 * hd);
  const X1Data here = solve_X1(bethe, center);
  const cplx R = here.p;
  out.half_r_plus_q = 0.5 * (R + here.q);
  out.U = Uf(tau, x);
  const double hm = 1e-3;
  auto Rx = [&](double e) { return Rf(tau, x + e); };
  const cplx R_x = (Rx(-2 * hm) - 8.0 * Rx(-hm) + 8.0 * Rx(hm) - Rx(2 * hm)) / (12.0 * hm);
  out.miura = R_x - R * R;
  double h = stencil.h;
  for (int i = 0; i < stencil.refinements; ++i, h *= 0.5) {
    out.h.push_back(h);
    const cplx Rt = d1([&](double e) { return Rf(tau + e, x); }, h);
    const cplx Rxd = d1([&](double e) { return Rf(tau, x + e); }, h);
    const cplx Rxxx = d3([&](double e) { return Rf(tau, x + e); }, h);
    out.mkdv_residual.push_back(
        normalized_residual(std::array<cplx, 3>{3.0 * Rt, Rxxx, -6.0 * R * R * Rxd}));
    out.kdv_residual.push_back(normalized_residual(stencil::kdv_terms(Uf, tau, x, h)));
  }
  return out;
}

}  // namespace relaxtime
