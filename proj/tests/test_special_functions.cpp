#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <limits>

#include "relaxtime/special_functions.hpp"

using namespace relaxtime;

namespace {

// Li_s(z) = z / Gamma(s) * 2 int_0^inf v^{2s-1} / (e^{v^2} - z) dv, valid off [1, inf).
cplx polylog_oracle(double s, cplx z) {
  using boost::math::quadrature::gauss_kronrod;
  const double inf = std::numeric_limits<double>::infinity();
  auto f = [&](double v) { return std::pow(v, 2.0 * s - 1.0) / (std::exp(v * v) - z); };
  const double re = gauss_kronrod<double, 61>::integrate([&](double v) { return f(v).real(); }, 0.0, inf, 15, 1e-14);
  const double im = gauss_kronrod<double, 61>::integrate([&](double v) { return f(v).imag(); }, 0.0, inf, 15, 1e-14);
  return z * 2.0 * cplx(re, im) / std::tgamma(s);
}

cplx series_oracle(double s, cplx z) {
  cplx sum = 0.0, power = 1.0;
  for (int k = 1; k < 400; ++k) {
    power *= z;
    sum += power / std::pow(k, s);
  }
  return sum;
}

const PolylogOrder kOrders[] = {kLiHalf, kLiThreeHalves, kLiFiveHalves};

}  // namespace

TEST_CASE("polylog matches the power series in the inner disk") {
  for (PolylogOrder s : kOrders) {
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.5, 0.1), cplx(0.0, 0.55), cplx(0.1, 0.0)}) {
      CAPTURE(s.twice_s);
      CAPTURE(z);
      CHECK(std::abs(polylog(s, z) - series_oracle(s.s(), z)) <= 1e-13);
    }
  }
}

TEST_CASE("polylog matches the integral representation across the cut plane") {
  for (PolylogOrder s : kOrders) {
    for (cplx z : {cplx(-3.0, 0.0), cplx(0.9, 0.3), cplx(2.0, 1.5), cplx(-20.0, -4.0), cplx(0.99, -0.01),
                   cplx(-0.8, 0.0)}) {
      CAPTURE(s.twice_s);
      CAPTURE(z);
      const cplx ref = polylog_oracle(s.s(), z);
      CHECK(std::abs(polylog(s, z) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("the three evaluation methods agree where their domains overlap") {
  for (PolylogOrder s : kOrders) {
    for (cplx z : {cplx(0.5, 0.1), cplx(-0.4, 0.3)}) {
      const cplx a = polylog_with(s, z, EvalDomainTag::InnerDisk);
      CHECK(std::abs(a - polylog_with(s, z, EvalDomainTag::NearOne)) <= 1e-12);
      CHECK(std::abs(a - polylog_with(s, z, EvalDomainTag::CutPlane)) <= 1e-12);
    }
  }
  CHECK(select_polylog_domain(cplx(0.2, 0.1)) == EvalDomainTag::InnerDisk);
  CHECK(select_polylog_domain(cplx(0.95, 0.05)) == EvalDomainTag::NearOne);
  CHECK(select_polylog_domain(cplx(-100.0, 3.0)) == EvalDomainTag::CutPlane);
}

TEST_CASE("polylog at z = -1 against the eta function") {
  for (PolylogOrder s : kOrders) {
    const double eta = (1.0 - std::pow(2.0, 1.0 - s.s())) * boost::math::zeta(s.s());
    CHECK(polylog(s, cplx(-1.0, 0.0)).real() == doctest::Approx(-eta).epsilon(1e-13));
  }
  CHECK(polylog(kLiThreeHalves, -1.0).real() == doctest::Approx(-0.7651).epsilon(1e-4 / 0.7651));
  CHECK(polylog(kLiFiveHalves, -1.0).real() == doctest::Approx(-0.8671).epsilon(1e-4 / 0.8671));
}

TEST_CASE("polylog properties") {
  for (PolylogOrder s : kOrders) {
    const cplx z(0.7, 0.4);
    CHECK(std::abs(polylog(s, std::conj(z)) - std::conj(polylog(s, z))) <= 1e-14);
    // z d/dz Li_s = Li_{s-1}
    if (s.twice_s > 1) {
      const double h = 1e-5;
      const cplx d = (polylog(s, z * std::exp(h)) - polylog(s, z * std::exp(-h))) / (2.0 * h);
      CHECK(std::abs(d - polylog({s.twice_s - 2}, z)) <= 1e-8);
    }
    CHECK(gamma_one_minus_s(s) == doctest::Approx(std::tgamma(1.0 - s.s())).epsilon(1e-14));
  }
  // regular part: Li_s(e^mu) - Gamma(1 - s) (-mu)^{s-1}
  const cplx mu(-0.3, 0.2);
  for (PolylogOrder s : kOrders) {
    const cplx lhs = polylog(s, std::exp(mu)) - gamma_one_minus_s(s) * std::pow(-mu, s.s() - 1.0);
    CHECK(std::abs(lhs - polylog_regular_part(s, mu)) <= 1e-12);
  }
  CHECK_THROWS_AS(polylog(kLiHalf, cplx(2.0, 0.0)), DomainError);
}

TEST_CASE("Airy function against an independent implementation") {
  for (double x : {-20.0, -5.0, -1.3, 0.0, 0.7, 2.0, 10.0, 40.0}) {
    CAPTURE(x);
    CHECK(airy(x) == doctest::Approx(boost::math::airy_ai(x)).epsilon(1e-12));
    CHECK(airy_pair_real(x).aip.real() == doctest::Approx(boost::math::airy_ai_prime(x)).epsilon(1e-12));
  }
  CHECK(airy(0.0) == doctest::Approx(1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0))).epsilon(1e-15));
  // Ai'' = x Ai off the real axis
  const cplx x(1.2, 0.8);
  const double h = 1e-4;
  const cplx d2 = (airy_pair(x + h).aip - airy_pair(x - h).aip) / (2.0 * h);
  CHECK(std::abs(d2 - x * airy(x)) <= 1e-8);
  CHECK(std::abs(airy(std::conj(x)) - std::conj(airy(x))) <= 1e-15);
  CHECK_THROWS_AS(airy(cplx(2000.0, 0.0)), RangeError);
}

TEST_CASE("prefactors") {
  const cplx z(0.3, -0.2);
  const Prefactors p = prefactors(z);
  CHECK(std::abs(p.A1 + polylog(kLiThreeHalves, z) / kSqrt2Pi) <= 1e-15);
  CHECK(std::abs(p.A2 + polylog(kLiFiveHalves, z) / kSqrt2Pi) <= 1e-15);
  CHECK(std::abs(p.A3 + std::log(1.0 - z) / 4.0) <= 1e-15);
  // B(z) = (1/4 pi) int_0^z Li_{1/2}(y)^2 / y dy, with the series oracle for Li_{1/2}.
  for (double zr : {0.3, -0.5}) {
    using boost::math::quadrature::gauss_kronrod;
    const double ref = gauss_kronrod<double, 61>::integrate(
                           [&](double t) {
                             const double li = series_oracle(0.5, zr * t).real();
                             return li * li / t;
                           },
                           0.0, 1.0, 10, 1e-15) /
                       (4.0 * kPi);
    CHECK(prefactors(zr).B.real() == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(std::abs(b_function(z, 20) - b_function(z, 40)) <= 1e-14);
  CHECK(std::abs(prefactors(0.0).B) == 0.0);
  CHECK_THROWS_AS(prefactors(1.2), DomainError);
}
