#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/airy.hpp>
#include <cmath>

#include "relaxtime/bethe.hpp"
#include "relaxtime/distributions.hpp"
#include "relaxtime/special_functions.hpp"
#include "relaxtime/tails.hpp"

using namespace relaxtime;

namespace {

double calB_oracle(double x, double alpha) {
  auto f = [&](double y) {
    const double a = boost::math::airy_ai(y);
    return (y - x) * std::exp(alpha * y) * a * a;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, x, x + 60.0, 15, 1e-15);
}

}  // namespace

TEST_CASE("B(x; alpha) against adaptive quadrature of Boost's Airy function") {
  for (double x : {1.0, 2.5, 4.0, 9.0}) {
    CAPTURE(x);
    CHECK(calB(x, 0.0) == doctest::Approx(calB_oracle(x, 0.0)).epsilon(1e-11));
  }
  CHECK(calB(2.0, 0.5) == doctest::Approx(calB_oracle(2.0, 0.5)).epsilon(1e-11));
  CHECK(calB(3.0, -0.5) == doctest::Approx(calB_oracle(3.0, -0.5)).epsilon(1e-11));
  CHECK(calB(4.0, 0.0) == doctest::Approx(4.957912153358292e-08).epsilon(1e-12));
  CHECK_THROWS_AS(calB(0.5, 0.0), DomainError);
}

TEST_CASE("B asymptotic ratio values") {
  // The leading asymptotic form 1/(16 pi x^{3/2}) e^{-4 x^{3/2}/3} is approached slowly.
  auto scaled = [](double x) {
    return calB(x, 0.0) * 16.0 * kPi * std::pow(x, 1.5) * std::exp(4.0 * std::pow(x, 1.5) / 3.0);
  };
  CHECK(scaled(4.0) == doctest::Approx(0.855329).epsilon(1e-5));
  CHECK(scaled(9.0) == doctest::Approx(0.950012).epsilon(1e-5));
  CHECK(scaled(25.0) > scaled(9.0));
  CHECK(scaled(25.0) < 1.0);
}

TEST_CASE("Airy-like function") {
  CHECK(airy_like_A(20.0, 0.0, 1.0) / airy(20.0) == doctest::Approx(1.0).epsilon(1e-3));
  for (double mu : {0.0, 0.3, -0.4}) {
    for (double tau : {1.0, 0.6}) {
      const double closed = airy_like_closed_form(3.0, mu, tau);
      CHECK(airy_like_A(3.0, mu, tau, false) == doctest::Approx(closed).epsilon(1e-11));
    }
  }
  CHECK(airy_like_closed_form(2.0, 0.0, 1.0) == doctest::Approx(airy(2.0)).epsilon(1e-14));
  const double y = 30.0;
  CHECK(airy_like_A(y, 0.2, 1.0) / airy_like_asymptotic(y, 0.2, 1.0) == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("tail ratio at gamma = 1/2 approaches 2") {
  const TailRatio r3 = tail_ratio({1.0, 0.5, 3.0, 0.0, false});
  const TailRatio r4 = tail_ratio({1.0, 0.5, 4.0, 0.0, false});
  CHECK(r4.expected == 2.0);
  CHECK(r4.ratio >= 1.7);
  CHECK(r4.ratio <= 2.3);
  CHECK(std::abs(r4.ratio - 2.0) < std::abs(r3.ratio - 2.0));
  CHECK(r4.one_minus_F >= kOneMinusFFloor);
  CHECK(r4.one_minus_reference == doctest::Approx(one_minus_F_gue(4.0 + 0.0625)).epsilon(1e-10));
  CHECK(tail_ratio({1.0, 0.0, 4.0, 0.0, false}).expected == 1.0);
  CHECK_THROWS_AS(tail_ratio({1.0, 0.0, 8.0, 0.0, false}), PrecisionError);
}

TEST_CASE("tail trace references and truncation index") {
  const TailTraceReference ref = tail_trace_reference(6.0, 1.0, 0.5);
  const double s = 6.0 + 0.0625;
  CHECK(ref.b == doctest::Approx(calB(s, 0.0)).epsilon(1e-14));
  CHECK(ref.b_plus == doctest::Approx(calB(s, 0.5)).epsilon(1e-14));
  CHECK(ref.b_minus == doctest::Approx(calB(s, -0.5)).epsilon(1e-14));
  CHECK(tail_truncation_index(4.0, 1.0) == 3);
  CHECK(tail_truncation_index(36.0, 1.0) == 9);
  const TraceLaurent L = trace_laurent(6.0, 1.0, 0.5);
  CHECK(std::abs(L.c0.imag()) <= 1e-3 * std::abs(L.c0.real()));
  CHECK(L.c0.real() > 0.0);
}

TEST_CASE("Hilbert-Schmidt norms decay and the Airy series approximates T") {
  double previous = 1.0;
  for (double x : {4.0, 6.0, 8.0}) {
    const double z = std::exp(-x / 2.0);
    const BetheSet b = adequate_roots(enumerate_roots(z, 12), {1.0, 0.0, x});
    const double hs = hs_norm_squared(x, 1.0, 0.0, b);
    CHECK(hs > 0.0);
    CHECK(hs < previous);
    previous = hs;
  }
  const double y = 6.0;
  const BetheSet b = adequate_roots(enumerate_roots(std::exp(-y / 2.0), 12), {1.0, 0.3, y});
  const double remainder = tail_series_remainder(y, 1.0, 0.3, b);
  CHECK(remainder <= 2e-4);
}
