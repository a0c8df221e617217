#include <doctest.h>

#include <cmath>

#include "relaxtime/distributions.hpp"
#include "relaxtime/tails.hpp"

using namespace relaxtime;

TEST_CASE("circle quadrature nodes") {
  const CircleQuadrature q{0.4, 64};
  CHECK(q.node(32) == cplx(-0.4, 0.0));
  CHECK(q.node(0) == cplx(0.4, 0.0));
  for (int j = 1; j < 32; ++j) CHECK(q.node(64 - j) == std::conj(q.node(j)));
  CHECK(std::abs(q.node(5) - std::polar(0.4, 2.0 * kPi * 5 / 64)) <= 1e-16);
  CHECK_THROWS_AS((CircleQuadrature{0.4, 48}.validate()), DomainError);
  CHECK_THROWS_AS((CircleQuadrature{0.4, 8}.validate()), DomainError);
  CHECK_THROWS_AS((CircleQuadrature{1.0, 64}.validate()), DomainError);
}

TEST_CASE("radius modes") {
  CHECK(default_radius(RadiusMode::Generic, 1.0, 0.0) == 0.5);
  CHECK(default_radius(RadiusMode::LargeTau, 10.0, 0.0) == 0.9);
  CHECK(default_radius(RadiusMode::SmallTau, 0.1, 0.0) == doctest::Approx(std::exp(-0.5 / std::pow(0.1, 2.0 / 3.0))));
  CHECK(default_radius(RadiusMode::Tail, 1.0, 4.0) == doctest::Approx(std::exp(-2.0)));
  CHECK(choose_radius_mode(0.0, 0.2) == RadiusMode::SmallTau);
  CHECK(choose_radius_mode(0.0, 8.0) == RadiusMode::LargeTau);
  CHECK(choose_radius_mode(0.0, 1.0) == RadiusMode::Generic);
  CHECK(choose_radius_mode(5.0, 1.0) == RadiusMode::Tail);
}

TEST_CASE("step distribution: frozen values") {
  // Values reproduced by an independent prototype of the same formulas.
  CHECK(F_step(0.0, 1.0, 0.2).value == doctest::Approx(0.968112649015820).epsilon(1e-11));
  CHECK(F_step(-1.0, 1.0, 0.0).value == doctest::Approx(0.816756095685850).epsilon(1e-11));
  CHECK(F_step(1.0, 0.7, -0.3).value == doctest::Approx(0.997925349744554).epsilon(1e-11));
  const DistributionResult r = F_step(0.0, 1.0, 0.2, {0.5, 64});
  CHECK(std::abs(r.imag_residual) <= 1e-9);
  CHECK(r.error_estimate <= 1e-10);
  CHECK(r.diagnostics.M >= 128);
  CHECK(r.diagnostics.K >= 1);
  CHECK(r.diagnostics.radius == 0.5);
}

TEST_CASE("step distribution: periodicity, radius independence, monotonicity") {
  const CircleQuadrature q{0.5, 64};
  for (double x : {-1.5, 0.5}) {
    CHECK(std::abs(F_step(x, 1.0, 0.2, q).value - F_step(x, 1.0, 1.2, q).value) <= 1e-8);
    CHECK(std::abs(F_step(x, 1.0, -0.3, q).value - F_step(x, 1.0, 0.7, q).value) <= 1e-8);
    CHECK(std::abs(F_step(x, 1.0, 0.2, {0.4, 64}).value - F_step(x, 1.0, 0.2, {0.6, 64}).value) <= 1e-8);
  }
  double previous = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double f = F_step(-2.5 + 0.5 * i, 1.0, 0.0, q).value;
    CHECK(f >= previous);
    CHECK(f <= 1.0 + 1e-12);
    previous = f;
  }
  CHECK_THROWS_AS(F_step(0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("complement accuracy") {
  const CircleQuadrature q{default_radius(RadiusMode::Tail, 1.0, 3.0), 64};
  const double direct = 1.0 - F_step(1.0, 1.0, 0.0, {0.5, 64}).value;
  const double comp = one_minus_F_step(1.0, 1.0, 0.0, {0.5, 64}).value;
  CHECK(comp == doctest::Approx(direct).epsilon(1e-8));
  const double tail = one_minus_F_step(3.0, 1.0, 0.0, q).value;
  CHECK(tail > 0.0);
  CHECK(tail < 1e-3);
}

TEST_CASE("flat distribution") {
  CHECK(F_flat(0.0, 1.0).value == doctest::Approx(0.901176978050532).epsilon(1e-11));
  CHECK(F_flat(-1.0, 2.0).value == doctest::Approx(0.825426957663505).epsilon(1e-11));
  CHECK(std::abs(F_flat(0.3, 1.0, {0.4, 64}).value - F_flat(0.3, 1.0, {0.6, 64}).value) <= 1e-8);
  CHECK(one_minus_F_flat(0.0, 1.0, {0.5, 64}).value == doctest::Approx(1.0 - 0.901176978050532).epsilon(1e-9));
}

TEST_CASE("Tracy-Widom distributions against tabulated values") {
  CHECK(F_gue(0.0) == doctest::Approx(0.9693728284).epsilon(1e-9));
  CHECK(F_gue(-2.0) == doctest::Approx(0.4132241425).epsilon(1e-9));
  CHECK(F_goe(0.0) == doctest::Approx(0.8319080662).epsilon(1e-9));
  CHECK(F_gue_result(0.0).diagnostics.m >= 80);
  // 1 - F_GUE(x) is B(x; 0) to leading order in the right tail
  CHECK(one_minus_F_gue(4.0) == doctest::Approx(calB(4.0)).epsilon(1e-6));
  CHECK(one_minus_F_gue(1.0) == doctest::Approx(1.0 - F_gue(1.0)).epsilon(1e-8));
  CHECK(one_minus_F_goe(1.0) == doctest::Approx(1.0 - F_goe(1.0)).epsilon(1e-8));
}

TEST_CASE("KPZ limit") {
  CHECK(F_kpz(0.0, 1.0, 0.0) == doctest::Approx(F_gue(0.0)));
  const double expected = F_gue(0.5 / std::cbrt(2.0) + 0.09 / (4.0 * std::pow(2.0, 4.0 / 3.0)));
  CHECK(F_kpz(0.5, 2.0, 0.3) == doctest::Approx(expected).epsilon(1e-14));
  const DistributionResult p = F_kpz_product(0.5, 2.0, 0.3);
  CHECK(std::abs(p.value - expected) <= 1e-9);
  CHECK(p.error_estimate <= 1e-8);
}

TEST_CASE("small tau approaches F_GUE") {
  const double tau = 0.1;
  const CircleQuadrature q{default_radius(RadiusMode::SmallTau, tau, 0.0), 64};
  CHECK(std::abs(F_step(std::cbrt(tau) * -1.0, tau, 0.0, q).value - F_gue(-1.0)) <= 5e-3);
}

TEST_CASE("large tau contour reduction") {
  const double tau = 10.0;
  const double c = std::pow(kPi, 0.25) / kSqrt2;
  const CircleQuadrature q{0.9, 64};
  for (double x : {-1.0, 0.5}) {
    const double f = F_step(-tau + c * x * std::sqrt(tau), tau, 0.0, q).value;
    CHECK(std::abs(F_large_tau_integral(x, tau) - f) <= 5e-3);
  }
  CHECK_THROWS_AS(F_large_tau_integral(0.0, 2.0), DomainError);
  CHECK(gaussian_cdf(0.0) == 0.5);
  CHECK(gaussian_cdf(1.0) == doctest::Approx(0.841344746068543).epsilon(1e-14));
}

TEST_CASE("node cache can be cleared and results are reproducible") {
  const double a = F_step(0.2, 1.0, 0.1).value;
  clear_circle_cache();
  CHECK(F_step(0.2, 1.0, 0.1).value == a);
}
