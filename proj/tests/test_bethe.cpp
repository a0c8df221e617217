#include <doctest.h>

#include <cmath>

#include "relaxtime/bethe.hpp"

using namespace relaxtime;

TEST_CASE("Bethe roots solve e^{-u^2/2} = z in the left half plane") {
  for (cplx z : {cplx(0.35, 0.0), cplx(0.2, -0.4), cplx(-0.5, 0.01), cplx(0.0, 0.6)}) {
    const BetheSet set = enumerate_roots(z, 8);
    REQUIRE(set.size() == 17);
    CHECK(set.K == 8);
    for (int k = -8; k <= 8; ++k) {
      const cplx u = set.at_k(k).u;
      CAPTURE(k);
      CHECK(u.real() < 0.0);
      CHECK(std::abs(std::exp(-0.5 * u * u) - z) <= 1e-12 * std::abs(z));
      CHECK(set.at_k(k).k == k);
      CHECK(std::abs(u - bethe_root(z, k)) == 0.0);
    }
  }
}

TEST_CASE("theta_0 branch conventions") {
  CHECK(theta0(cplx(-0.5, 0.0)) == doctest::Approx(2.0 * kPi));
  CHECK(theta0(cplx(-0.5, 0.0), true) == doctest::Approx(-2.0 * kPi));
  CHECK(theta0(cplx(0.0, 0.5)) == doctest::Approx(kPi));
  CHECK(theta0(cplx(0.0, -0.5)) == doctest::Approx(-kPi));
  // the two sides label the same root set with k shifted by one
  CHECK(std::abs(bethe_root(cplx(-0.5, 0.0), 0, true) - bethe_root(cplx(-0.5, 0.0), 1)) <= 1e-15);
  CHECK(theta0(cplx(0.5, 0.0)) == doctest::Approx(0.0));
  const double t = theta0(cplx(0.3, 0.2));
  CHECK(t > -2.0 * kPi);
  CHECK(t <= 2.0 * kPi);
}

TEST_CASE("Q from the imaginary-axis quadrature matches the direct ray integral") {
  for (cplx z : {cplx(0.35, 0.0), cplx(0.2, 0.3), cplx(-0.4, -0.2)}) {
    const BetheSet set = enumerate_roots(z, 4);
    for (int k : {-2, 0, 3}) {
      const cplx u = set.at_k(k).u;
      const cplx q = q_function(u);
      CAPTURE(u);
      CHECK(std::abs(q - q_function_direct(u)) <= 1e-10 * std::max(1.0, std::abs(q)));
      CHECK(std::abs(set.at_k(k).Q - q) <= 1e-13 * std::max(1.0, std::abs(q)));
      CHECK(std::abs(q_function(u, z) - q) <= 1e-13 * std::max(1.0, std::abs(q)));
    }
  }
  CHECK_THROWS_AS(q_function(cplx(1.0, 0.0)), SectorError);
  CHECK_THROWS_AS(enumerate_roots(cplx(1.2, 0.0), 4), DomainError);
  CHECK_THROWS_AS(enumerate_roots(cplx(0.5, 0.0), 0), DomainError);
}

TEST_CASE("exponents") {
  const ExponentParams p{1.3, 0.2, -0.4};
  const cplx xi(-0.8, 0.5);
  const cplx q = q_function(xi);
  CHECK(std::abs(exponent_phi(xi, p) - (-p.tau * xi * xi * xi / 3.0 + p.x * xi - q)) <= 1e-13);
  CHECK(std::abs(exponent_phi(xi, q, p) - exponent_phi(xi, p)) <= 1e-14);
  const ExponentParams doubled{2.0 * p.tau, p.gamma, 2.0 * p.x};
  CHECK(std::abs(exponent_psi(xi, p) - 0.5 * exponent_phi(xi, doubled)) <= 1e-13);
  CHECK(std::abs(exponent_v(xi, p) - (-p.tau * xi * xi * xi / 3.0 + p.gamma * xi * xi / 2.0 + p.x * xi)) <= 1e-14);
}

TEST_CASE("adaptive truncation") {
  const ExponentParams p{1.0, 0.0, 0.0};
  const BetheSet base = enumerate_roots(cplx(0.4, 0.2), 4);
  const BetheSet set = adequate_roots(base, p);
  CHECK(set.K >= 4);
  CHECK(set.K <= kMaxTruncation);
  CHECK(truncation_tail_ratio(set, p) < 1e-17);
  for (int k = -4; k <= 4; ++k) CHECK(set.at_k(k).u == base.at_k(k).u);
  const BetheSet wider = extend_roots(set, set.K + 4);
  CHECK(wider.K == set.K + 4);
  CHECK(wider.at_k(0).Q == set.at_k(0).Q);
  const BetheSet flat = adequate_roots(base, {0.5, 0.0, 0.0}, 1e-17, true);
  CHECK(truncation_tail_ratio_flat(flat, {0.5, 0.0, 0.0}) < 1e-17);
  // smaller tau needs more roots
  CHECK(adequate_roots(base, {0.1, 0.0, 0.0}).K >= set.K);
}
