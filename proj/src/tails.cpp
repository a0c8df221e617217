#include "relaxtime/tails.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relaxtime/distributions.hpp"
#include "relaxtime/kernels.hpp"
#include "relaxtime/parallel.hpp"
#include "relaxtime/quadrature.hpp"
#include "relaxtime/simd.hpp"
#include "relaxtime/special_functions.hpp"

namespace relaxtime {

namespace {

// Composite Gauss-Legendre on [a, b] with panel doubling until the relative change is
// below rtol.
template <typename F>
double adaptive_real_integral(F&& f, double a, double b, double rtol, const char* what) {
  auto integrate = [&](int panels) {
    const GaussRule rule = composite_rule(a, b, panels, 20);
    std::vector<double> values(rule.x.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(rule.x[i]);
    return simd::weighted_sum(rule.w.data(), values.data(), values.size());
  };
  double previous = integrate(4);
  for (int panels = 8; panels <= 512; panels *= 2) {
    const double next = integrate(panels);
    if (std::abs(next - previous) <= rtol * std::abs(next)) return next;
    previous = next;
  }
  throw ConvergenceError(what);
}

// Window [x, x + a sqrt(x)] with a = max(1, 15 / x): the integrand has dropped by e^{-2 a x}
// at the right end.
double tail_window(double x) { return std::max(1.0, 15.0 / x) * std::sqrt(x); }

}  // namespace

double calB(double x, double alpha) {
  if (!(x >= 1.0)) throw DomainError("calB requires x >= 1");
  auto f = [&](double y) {
    const double ai = airy_kernel_value(y);
    return (y - x) * std::exp(alpha * y) * ai * ai;
  };
  return adaptive_real_integral(f, x, x + tail_window(x), 1e-12, "calB: quadrature did not converge");
}

double airy_like_closed_form(double y, double mu, double tau) {
  const double c = std::cbrt(tau);
  return std::exp(mu * mu * mu / (12.0 * tau * tau) + mu * y / (2.0 * tau)) / c *
         airy(y / c + mu * mu / (4.0 * c * c * c * c));
}

double airy_like_asymptotic(double y, double mu, double tau) {
  const double Y = y + mu * mu / (4.0 * tau);
  return std::pow(Y, -0.25) / (2.0 * kSqrtPi * std::pow(tau, 0.25)) *
         std::exp(mu * mu * mu / (12.0 * tau * tau) + mu * y / (2.0 * tau) -
                  2.0 / (3.0 * std::sqrt(tau)) * std::pow(Y, 1.5));
}

double airy_like_A(double y, double mu, double tau, bool include_q) {
  if (!(tau > 0.0)) throw DomainError("airy_like_A requires tau > 0");
  const double Y = y + mu * mu / (4.0 * tau);
  if (!(Y > 0.0)) throw ContourError("airy_like_A: contour scale is not positive");
  const double s = std::sqrt(Y / tau);
  const double shift = mu / (2.0 * tau);
  auto exponent = [&](cplx xi) {
    cplx e = -tau * xi * xi * xi / 3.0 + 0.5 * mu * xi * xi + y * xi;
    if (include_q) {
      try {
        e -= q_function(xi);
      } catch (const SectorError&) {
        throw ContourError("airy_like_A: contour leaves the sector where Q is analytic");
      }
    }
    return e;
  };
  const double ref = exponent(cplx(-s + shift, 0.0)).real();
  // Hyperbola branch: w = a + i sign sqrt(a^2 + 1.45 a + 0.49), a from -1 - L to -1.
  auto g = [](double a) { return 2.0 / 3.0 * a * a * a + 1.45 * a * a + 1.49 * a; };
  double L = 0.5;
  while (tau * s * s * s * (g(-1.0) - g(-1.0 - L)) < 60.0 && L < 1e3) L *= 1.5;
  auto branch = [&](double a, double sign, cplx& dxi_da) {
    const double b = sign * std::sqrt(a * a + 1.45 * a + 0.49);
    const double db = sign * (2.0 * a + 1.45) / (2.0 * std::sqrt(a * a + 1.45 * a + 0.49));
    dxi_da = s * cplx(1.0, db);
    return s * cplx(a, b) + shift;
  };
  auto integrate = [&](int panels) {
    cplx total = 0.0;
    // Vertical piece, b from -0.2 to 0.2.
    const GaussRule vertical = composite_rule(-0.2, 0.2, panels, 20);
    for (std::size_t i = 0; i < vertical.x.size(); ++i) {
      const cplx xi = s * cplx(-1.0, vertical.x[i]) + shift;
      total += vertical.w[i] * std::exp(exponent(xi) - ref) * s * kI;
    }
    const GaussRule hyper = composite_rule(-1.0 - L, -1.0, 2 * panels, 20);
    for (std::size_t i = 0; i < hyper.x.size(); ++i) {
      cplx d_lower, d_upper;
      const cplx lower = branch(hyper.x[i], -1.0, d_lower);
      const cplx upper = branch(hyper.x[i], 1.0, d_upper);
      // Lower branch runs towards a = -1, upper branch away from it.
      total += hyper.w[i] * (std::exp(exponent(lower) - ref) * d_lower -
                             std::exp(exponent(upper) - ref) * d_upper);
    }
    return total / (2.0 * kPi * kI);
  };
  cplx previous = integrate(2);
  for (int panels = 4; panels <= 128; panels *= 2) {
    const cplx next = integrate(panels);
    if (std::abs(next - previous) <= 1e-13 * std::abs(next)) return (next * std::exp(ref)).real();
    previous = next;
  }
  throw ContourError("airy_like_A: contour quadrature did not converge");
}

TailRatio tail_ratio(const TailParams& p) {
  if (!(p.tau > 0.0)) throw DomainError("tail_ratio requires tau > 0");
  if (std::abs(p.gamma) > 0.5 + 1e-14) throw DomainError("tail_ratio requires |gamma| <= 1/2");
  const CircleQuadrature quad{std::exp(-p.x / (2.0 * p.tau)), kDefaultCircleNodes};
  TailRatio out;
  const double c = std::cbrt(p.tau);
  if (p.flat) {
    out.one_minus_F = one_minus_F_flat(p.x, p.tau, quad).value;
    out.one_minus_reference = one_minus_F_goe(std::cbrt(4.0) * p.x / c);
    out.expected = 1.0;
  } else {
    out.one_minus_F = one_minus_F_step(p.x, p.tau, p.gamma, quad).value;
    out.one_minus_reference =
        one_minus_F_gue(p.x / c + p.gamma * p.gamma / (4.0 * c * c * c * c));
    out.expected = (std::abs(std::abs(p.gamma) - 0.5) < 1e-14) ? 2.0 : 1.0;
  }
  if (out.one_minus_F < kOneMinusFFloor) {
    throw PrecisionError("tail_ratio: 1 - F is below the determinant precision floor");
  }
  out.ratio = out.one_minus_F / out.one_minus_reference;
  return out;
}

TailTraceReference tail_trace_reference(double x, double tau, double gamma) {
  const double c = std::cbrt(tau);
  const double arg = x / c + gamma * gamma / (4.0 * c * c * c * c);
  const double alpha = 0.5 / (c * c);
  return {calB(arg, 0.0), calB(arg, alpha), calB(arg, -alpha)};
}

TraceLaurent trace_laurent(double x, double tau, double gamma, int M) {
  const CircleQuadrature quad{std::exp(-x / (2.0 * tau)), M};
  quad.validate();
  std::vector<cplx> traces(M);
  const ExponentParams p{tau, gamma, x};
  parallel_for(M, [&](std::size_t j) {
    const cplx z = quad.node(static_cast<int>(j));
    const BetheSet bethe = adequate_roots(enumerate_roots(z, kDefaultTruncation), p);
    const CMatrix J = step_J(bethe, p);
    traces[j] = (J.array() * J.array()).sum();
  });
  TraceLaurent out;
  auto coefficient = [&](int n) {
    cplx sum = 0.0;
    for (int j = 0; j < M; ++j) sum += traces[j] * std::pow(quad.node(j), -n);
    return sum / static_cast<double>(M);
  };
  out.c_minus1 = coefficient(-1);
  out.c0 = coefficient(0);
  out.c_plus1 = coefficient(1);
  return out;
}

double hs_norm_squared(double x, double tau, double gamma, const BetheSet& bethe) {
  auto f = [&](double y) { return (y - x) * std::norm(calT(gamma, y, bethe, tau)); };
  const double width = tail_window(std::max(x, 1.0)) * std::max(1.0, std::sqrt(tau));
  return adaptive_real_integral(f, x, x + width, 1e-10, "hs_norm_squared: quadrature did not converge");
}

int tail_truncation_index(double y, double tau) {
  return static_cast<int>(std::floor(19.0 / 12.0 * std::sqrt(tau * y)));
}

double tail_series_remainder(double y, double tau, double gamma, const BetheSet& bethe) {
  const cplx z = bethe.z;
  const int K = tail_truncation_index(y, tau);
  cplx series = 0.0;
  for (int k = -K; k <= 0; ++k) series += std::pow(z, -k) * airy_like_A(y, gamma - k, tau);
  for (int k = 1; k < 200; ++k) {
    const cplx term = std::pow(z, -k) * airy_like_A(y, gamma - k, tau);
    series += term;
    if (std::abs(term) < 1e-18 * std::abs(series)) break;
  }
  return std::abs(calT(gamma, y, bethe, tau) - series);
}

}  // namespace relaxtime
