#include <doctest.h>

#include <cmath>

#include "relaxtime/bethe.hpp"
#include "relaxtime/riemann_sheet.hpp"
#include "relaxtime/special_functions.hpp"

using namespace relaxtime;

TEST_CASE("uniformizing coordinate on both sheets") {
  for (cplx z : {cplx(0.3, 0.1), cplx(-0.2, 0.6), cplx(0.9, -0.05), cplx(2.5, 0.3)}) {
    const cplx u1 = u0_sheet({z, Sheet::One});
    const cplx u2 = u0_sheet({z, Sheet::Two});
    CHECK(std::abs(std::exp(-0.5 * u1 * u1) - z) <= 1e-14 * std::abs(z));
    CHECK(u1.real() < 0.0);
    CHECK(std::abs(u1 + u2) == 0.0);
    const SheetPoint back = sheet_point_from_coordinate(u2);
    CHECK(back.sheet == Sheet::Two);
    CHECK(std::abs(back.z - z) <= 1e-14 * std::abs(z));
  }
}

TEST_CASE("continued polylogs agree with the principal branch on sheet One") {
  for (PolylogOrder s : {kLiHalf, kLiThreeHalves, kLiFiveHalves}) {
    for (cplx z : {cplx(0.4, 0.3), cplx(-3.0, 1.0), cplx(0.95, -0.1)}) {
      CHECK(std::abs(polylog_sheet(s, {z, Sheet::One}) - polylog(s, z)) <= 1e-12 * std::max(1.0, std::abs(polylog(s, z))));
    }
  }
}

TEST_CASE("f1 and f2 from their polylog expressions") {
  const cplx z(0.35, 0.2);
  const cplx U = u0_sheet({z, Sheet::One});
  const FF f = ff_extensions({z, Sheet::One});
  const cplx l3 = polylog(kLiThreeHalves, z), l5 = polylog(kLiFiveHalves, z);
  CHECK(std::abs(f.f1 - ((l3 - l5) / kSqrt2Pi - 2.0 * U - 2.0 * U * U * U / 3.0)) <= 1e-13);
  CHECK(std::abs(f.f2 - (2.0 * U - l3 / kSqrt2Pi)) <= 1e-13);
}

TEST_CASE("re f1 at z = -1 from both sides") {
  const double up = ff_extensions({cplx(-1.0, 0.0), Sheet::One, Side::Upper}).f1.real();
  const double lo = ff_extensions({cplx(-1.0, 0.0), Sheet::One, Side::Lower}).f1.real();
  CHECK(std::abs(up + 3.8388) <= 1e-3);
  CHECK(std::abs(lo + 3.8388) <= 1e-3);
}

TEST_CASE("residue of the one-form g at z = 1") {
  CHECK(std::abs(g_residue() - 3.0) <= 1e-6);
  CHECK(std::abs(g_residue(0.3, 512) - 3.0) <= 1e-10);
}

TEST_CASE("E is path independent and matches the closed form on sheet One") {
  const SheetPoint p{cplx(0.2, 0.3), Sheet::One};
  const cplx closed = EE_sheet_one(p.z);
  CHECK(std::abs(EE(p, default_path(p, kI)) - closed) <= 1e-10 * std::abs(closed));
  CHECK(std::abs(EE(p, default_path(p, cplx(-1.0, -0.7))) - closed) <= 1e-10 * std::abs(closed));
  const SheetPoint q{cplx(0.5, 0.4), Sheet::Two};
  const cplx a = EE(q, default_path(q, kI));
  const cplx b = EE(q, default_path(q, cplx(0.8, -1.1)));
  CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
}

TEST_CASE("E against -4 u0^4 near z = 0 on sheet Two") {
  for (double y : {0.05, 0.1}) {
    const SheetPoint p{cplx(0.0, y), Sheet::Two};
    const cplx U = u0_sheet(p);
    CHECK(std::abs(EE(p) / (-4.0 * U * U * U * U) - 1.0) <= 10.0 * y * y);
  }
}

TEST_CASE("harmonic polylog constant") {
  const double target = -std::sqrt(kPi / 2.0) * std::log(2.0);
  CHECK(harmonic_polylog_constant() == doctest::Approx(target).epsilon(1e-9));
  CHECK(std::abs(harmonic_polylog_bracket(1e-3) - target) <= 2e-3);
  CHECK(std::abs(harmonic_polylog_bracket(1e-4) - target) < std::abs(harmonic_polylog_bracket(1e-3) - target));
  CHECK_THROWS_AS(harmonic_polylog_bracket(0.0), DomainError);
}

TEST_CASE("f1 along gamma_1") {
  const auto curve = f1_on_gamma1(801);
  REQUIRE(curve.size() == 801);
  CHECK(curve.front().t == doctest::Approx(-kSqrtPi));
  CHECK(curve.back().t == doctest::Approx(0.5 * kSqrtPi));
  double best = -1e300, where = 0.0;
  for (const auto& s : curve) {
    if (s.value > best) {
      best = s.value;
      where = s.t;
    }
  }
  CHECK(std::abs(best + 0.104065) <= 1e-4);
  CHECK(where == doctest::Approx(0.5 * kSqrtPi).epsilon(1e-3));
  CHECK(std::abs(curve.front().value + 3.8388) <= 1e-3);
  const cplx U = gamma1_coordinate(0.3);
  CHECK(std::abs(U - cplx(0.3, -kSqrtPi)) <= 1e-15);
  CHECK(f1_on_gamma1(7).size() == 7);
}
