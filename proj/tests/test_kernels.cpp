#include <doctest.h>

#include <cmath>

#include "relaxtime/bethe.hpp"
#include "relaxtime/fredholm.hpp"
#include "relaxtime/kernels.hpp"
#include "relaxtime/special_functions.hpp"

using namespace relaxtime;

namespace {

const ExponentParams kP{0.9, 0.3, 0.4};
const cplx kZ(0.25, 0.3);

BetheSet roots(const ExponentParams& p = kP, cplx z = kZ) { return adequate_roots(enumerate_roots(z, 12), p); }

}  // namespace

TEST_CASE("step kernel factorization and x-derivative") {
  const BetheSet b = roots();
  const CMatrix J = step_J(b, kP);
  const CMatrix K = build_step_Kz(b, kP).matrix;
  CHECK((K - J * J.transpose()).norm() <= 1e-14 * K.norm());
  CHECK((K - K.transpose()).norm() <= 1e-14 * K.norm());
  const double h = 1e-5;
  const CMatrix fd = (step_J(b, {kP.tau, kP.gamma, kP.x + h}) - step_J(b, {kP.tau, kP.gamma, kP.x - h})) / (2.0 * h);
  CHECK((fd - step_J_dx(b, kP)).norm() <= 1e-8 * fd.norm());
  // entry formula
  const cplx ui = b.at_k(1).u, uj = b.at_k(-2).u;
  const cplx phi_i = exponent_phi(ui, b.at_k(1).Q, kP), phi_j = exponent_phi(uj, b.at_k(-2).Q, kP);
  const cplx entry = std::exp(0.5 * (phi_i + phi_j) + kP.gamma * (ui * ui - uj * uj) / 4.0) /
                     (std::sqrt(-ui) * (ui + uj) * std::sqrt(-uj));
  CHECK(std::abs(J(1 + b.K, -2 + b.K) - entry) <= 1e-13 * std::abs(entry));
}

TEST_CASE("calT and its derivative") {
  const BetheSet b = roots();
  const double h = 1e-5;
  for (double y : {0.2, 1.0, 3.0}) {
    const cplx fd = (calT(kP.gamma, y + h, b, kP.tau) - calT(kP.gamma, y - h, b, kP.tau)) / (2.0 * h);
    CHECK(std::abs(fd - calT_dy(kP.gamma, y, b, kP.tau)) <= 1e-8 * std::max(1.0, std::abs(fd)));
  }
  cplx direct = 0.0;
  for (const auto& r : b.roots) {
    direct += std::exp(-kP.tau * r.u * r.u * r.u / 3.0 + kP.gamma * r.u * r.u / 2.0 + 1.5 * r.u - r.Q) / (-r.u);
  }
  CHECK(std::abs(calT(kP.gamma, 1.5, b, kP.tau) - direct) <= 1e-14 * std::abs(direct));
}

TEST_CASE("determinant identities at a fixed point") {
  const BetheSet b = roots();
  const cplx det_k = det_discrete(build_step_Kz(b, kP)).value;
  const HalfLineRule rule = half_line_rule(80, 1.0);
  CHECK(std::abs(det_k - det_T_product(kP, b, rule)) <= 1e-7);
  const IIKSOperator H = build_H(b, kP);
  CHECK(std::abs(det_k - det_i_minus(H.H).value) <= 1e-12);
  const ExponentParams flat{kP.tau, 0.0, kP.x};
  const BetheSet fb = adequate_roots(b, {0.5 * kP.tau, 0.0, 0.5 * kP.x}, 1e-17, true);
  const cplx det_flat = det_discrete(build_flat_K1(fb, {0.5 * kP.tau, 0.0, 0.5 * kP.x})).value;
  CHECK(std::abs(det_flat - det_i_minus(build_T_product(flat, fb, rule).B).value) <= 1e-7);
}

TEST_CASE("integrable kernel structure") {
  const BetheSet b = roots();
  const IIKSOperator H = build_H(b, kP);
  const std::size_t n = 2 * b.size();
  REQUIRE(H.s.size() == n);
  REQUIRE(H.H.rows() == static_cast<long>(n));
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(std::abs(H.s[i] - b.roots[i].u) == 0.0);
    CHECK(std::abs(H.s[i + b.size()] + b.roots[i].u) == 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(H.H(i, i)) == 0.0);
  const int i = 3, j = static_cast<int>(b.size()) + 5;
  const cplx expected = (H.f.row(i) * H.g.row(j).transpose())(0, 0) / (H.s[i] - H.s[j]);
  CHECK(std::abs(H.H(i, j) - expected) <= 1e-15 * std::abs(expected));
  // f(s)^T g(s) = 0 on the pole set
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs((H.f.row(k) * H.g.row(k).transpose())(0, 0)) <= 1e-12 * H.f.row(k).norm() * H.g.row(k).norm());
  }
}

TEST_CASE("T product kernel agrees with the factor matrices") {
  const BetheSet b = roots();
  const HalfLineRule rule = half_line_rule(60, 1.0);
  const TProductFactors T = build_T_product(kP, b, rule);
  const CMatrix AB = T.A * T.B;
  for (int i : {2, 17}) {
    for (int j : {5, 40}) {
      const cplx k = T_product_kernel(rule.t[i], rule.t[j], kP, b, rule);
      CHECK(std::abs(AB(i, j) - std::sqrt(rule.w[i] * rule.w[j]) * k) <= 1e-13 * std::max(1.0, std::abs(AB(i, j))));
    }
  }
}

TEST_CASE("flat kernel and derivative") {
  const ExponentParams p{0.6, 0.0, 0.3};
  const BetheSet b = adequate_roots(enumerate_roots(kZ, 12), p, 1e-17, true);
  const CMatrix K = build_flat_K1(b, p).matrix;
  CHECK((K - K.transpose()).norm() <= 1e-14 * K.norm());
  const double h = 1e-5;
  const CMatrix fd = (build_flat_K1(b, {p.tau, 0.0, p.x + h}).matrix - build_flat_K1(b, {p.tau, 0.0, p.x - h}).matrix) / (2.0 * h);
  CHECK((fd - flat_K1_dx(b, p)).norm() <= 1e-8 * fd.norm());
}

TEST_CASE("shifted Airy functions") {
  for (double s : {-2.0, 0.0, 1.5}) CHECK(shifted_airy(0.0, s, 1.0) == doctest::Approx(airy(s)).epsilon(1e-14));
  const double g = 0.4, s = 0.7, tau = 1.3, h = 1e-5;
  const double fd = (shifted_airy(g, s + h, tau) - shifted_airy(g, s - h, tau)) / (2.0 * h);
  CHECK(shifted_airy_ds(g, s, tau) == doctest::Approx(fd).epsilon(1e-8));
  const double closed = std::exp(g * g * g / (12.0 * tau * tau) + g * s / (2.0 * tau)) / std::cbrt(tau) *
                        airy(s / std::cbrt(tau) + g * g / (4.0 * std::pow(tau, 4.0 / 3.0)));
  CHECK(shifted_airy(g, s, tau) == doctest::Approx(closed).epsilon(1e-14));
  // A_gamma(s; tau) = a^{-1} A_{gamma / a^2}(s / a; tau / a^3)
  const double a = 1.7;
  CHECK(shifted_airy(g, s, tau) == doctest::Approx(shifted_airy(g / (a * a), s / a, tau / (a * a * a)) / a).epsilon(1e-12));
  CHECK(airy_kernel_value(150.0) == 0.0);
  CHECK(airy_kernel_derivative(150.0) == 0.0);
  CHECK(airy_kernel_value(3.0) == doctest::Approx(airy(3.0)).epsilon(1e-15));
}

TEST_CASE("Airy Nystrom matrices") {
  const HalfLineRule rule = half_line_rule(20, 1.0);
  const CMatrix A = build_airy_kernel(KernelKind::AirySingle, 0.5, 1.0, 0.0, rule);
  CHECK(std::abs(A(3, 7) - std::sqrt(rule.w[3] * rule.w[7]) * airy(0.5 + rule.t[3] + rule.t[7])) <= 1e-15);
  const CMatrix S = build_airy_kernel(KernelKind::AiryShifted, 0.5, 1.2, 0.3, rule);
  CHECK(std::abs(S(2, 4) - std::sqrt(rule.w[2] * rule.w[4]) * shifted_airy(0.3, rule.t[2] + 0.5 + rule.t[4], 1.2)) <= 1e-15);
  CHECK_THROWS_AS(build_airy_kernel(KernelKind::AiryScaledTau, 0.0, 1.0, 0.0, rule), DomainError);
  // tau^{1/3} T(tau^{1/3} y) approaches Ai(y) for small tau
  const CMatrix Ai = build_airy_kernel(KernelKind::AirySingle, 0.0, 1.0, 0.0, rule);
  double previous = 1.0;
  for (double tau : {0.1, 0.05, 0.025}) {
    const cplx z(std::exp(-0.5 / std::pow(tau, 2.0 / 3.0)), 0.0);
    const BetheSet b = adequate_roots(enumerate_roots(z, 12), {tau, 0.0, 0.0});
    const CMatrix T = build_airy_kernel(KernelKind::AiryScaledTau, 0.0, tau, 0.0, rule, &b);
    const double gap = (T - Ai).norm() / Ai.norm();
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous <= 1e-2);
}
