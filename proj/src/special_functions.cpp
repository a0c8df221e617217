#include "relaxtime/special_functions.hpp"

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "relaxtime/quadrature.hpp"
#include "relaxtime/simd.hpp"

namespace relaxtime {

namespace {

constexpr int kLogTerms = 90;
constexpr int kSeriesMaxTerms = 400;

int order_index(PolylogOrder s) {
  switch (s.twice_s) {
    case 1:
      return 0;
    case 3:
      return 1;
    case 5:
      return 2;
    default:
      throw DomainError("polylog: unsupported order 2s = " + std::to_string(s.twice_s));
  }
}

// zeta(s - k) / k! for k = 0 .. kLogTerms - 1.
using CoefficientTable = std::array<std::array<double, kLogTerms>, 3>;

const CoefficientTable& log_coefficients() {
  static const CoefficientTable table = [] {
    CoefficientTable t{};
    for (int idx = 0; idx < 3; ++idx) {
      const double s = 0.5 * (2 * idx + 1);
      for (int k = 0; k < kLogTerms; ++k) {
        t[idx][k] = boost::math::zeta(s - k) / boost::math::factorial<double>(k);
      }
    }
    return t;
  }();
  return table;
}

// Gamma(s) for the integral representation.
double gamma_of_s(PolylogOrder s) {
  switch (order_index(s)) {
    case 0:
      return kSqrtPi;
    case 1:
      return 0.5 * kSqrtPi;
    default:
      return 0.75 * kSqrtPi;
  }
}

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() >= 1.0; }

cplx series(PolylogOrder s, cplx z) {
  const double sv = s.s();
  const double r = std::abs(z);
  cplx sum = 0.0;
  cplx zk = z;
  for (int k = 1; k <= kSeriesMaxTerms; ++k) {
    sum += zk / std::pow(static_cast<double>(k), sv);
    // Remaining terms are bounded by |z|^(k+1) / (1 - |z|).
    if (std::pow(r, k + 1) / (1.0 - r) < 1e-17 * std::max(std::abs(sum), 1e-300)) break;
    zk *= z;
  }
  return sum;
}

cplx log_expansion(PolylogOrder s, cplx mu) {
  const double sv = s.s();
  const cplx singular = gamma_one_minus_s(s) * std::pow(-mu, sv - 1.0);
  return singular + polylog_regular_part(s, mu);
}

cplx integral_representation(PolylogOrder s, cplx z) {
  // Li_s(z) = (2 z / Gamma(s)) int_0^inf v^(2s-1) / (e^{v^2} - z) dv
  const int power = s.twice_s - 1;
  const double vmax = std::sqrt(std::max(std::log(std::abs(z)), 0.0) + 45.0) + 1.0;
  cplx previous = 0.0;
  for (int panels = 16; panels <= 8192; panels *= 2) {
    const GaussRule rule = composite_rule(0.0, vmax, panels, 16);
    std::vector<double> re(rule.x.size()), im(rule.x.size());
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double v = rule.x[i];
      const cplx f = std::pow(v, power) / (std::exp(v * v) - z);
      re[i] = f.real();
      im[i] = f.imag();
    }
    const cplx value =
        2.0 * z / gamma_of_s(s) * simd::weighted_sum(rule.w.data(), re.data(), im.data(), re.size());
    if (panels > 16 && std::abs(value - previous) <= 1e-14 * std::abs(value)) return value;
    previous = value;
  }
  throw ConvergenceError("polylog: integral representation did not stabilize");
}

}  // namespace

double gamma_one_minus_s(PolylogOrder s) {
  switch (order_index(s)) {
    case 0:
      return kSqrtPi;  // Gamma(1/2)
    case 1:
      return -2.0 * kSqrtPi;  // Gamma(-1/2)
    default:
      return 4.0 * kSqrtPi / 3.0;  // Gamma(-3/2)
  }
}

cplx polylog_regular_part(PolylogOrder s, cplx mu) {
  const auto& c = log_coefficients()[order_index(s)];
  if (std::abs(mu) >= 0.9 * 2.0 * kPi) {
    throw DomainError("polylog: log expansion used outside its disk of convergence");
  }
  cplx sum = 0.0;
  cplx term = 1.0;
  for (int k = 0; k < kLogTerms; ++k) {
    sum += c[k] * term;
    term *= mu;
  }
  return sum;
}

EvalDomainTag select_polylog_domain(cplx z) {
  if (std::abs(z) <= kInnerDiskRadius) return EvalDomainTag::InnerDisk;
  if (std::abs(std::log(z)) <= kLogExpansionRadius) return EvalDomainTag::NearOne;
  return EvalDomainTag::CutPlane;
}

cplx polylog_with(PolylogOrder s, cplx z, EvalDomainTag method) {
  order_index(s);
  if (on_cut(z)) throw DomainError("polylog: argument on the branch cut [1, inf)");
  if (z == cplx(0.0)) return 0.0;
  switch (method) {
    case EvalDomainTag::InnerDisk:
      if (std::abs(z) >= 1.0) throw DomainError("polylog: power series needs |z| < 1");
      return series(s, z);
    case EvalDomainTag::NearOne:
      return log_expansion(s, std::log(z));
    case EvalDomainTag::CutPlane:
      return integral_representation(s, z);
  }
  return 0.0;
}

cplx polylog(PolylogOrder s, cplx z) { return polylog_with(s, z, select_polylog_domain(z)); }

// ---------------------------------------------------------------------------
// Airy function: Ai(x) = (1/2 pi i) int_C exp(t^3/3 - x t) dt with C running
// from infinity at angle -pi/3 to infinity at angle pi/3. The contour is the
// vertical segment [c - i d, c + i d] through the saddle sqrt(x) = c + i d plus
// two rays leaving its endpoints at angles -pi/3 and pi/3.

namespace {

struct AiryContourPiece {
  cplx start;
  cplx direction;  // unit direction
  double length;
};

double airy_exponent_re(cplx t, cplx x) { return std::real(t * t * t / 3.0 - x * t); }

double ray_length(cplx start, cplx direction, cplx x, double reference) {
  double rho = 0.5;
  while (rho < 200.0) {
    if (airy_exponent_re(start + rho * direction, x) - reference < -60.0) return rho;
    rho *= 1.25;
  }
  return rho;
}

AiryPair airy_contour(cplx x, int refine) {
  const cplx s0 = std::sqrt(x);
  const double c = s0.real();
  const double d = std::abs(s0.imag());
  const cplx lower = cplx(c, -d);
  const cplx upper = cplx(c, d);
  const cplx dir_up = std::polar(1.0, kPi / 3.0);
  const cplx dir_down = std::polar(1.0, -kPi / 3.0);

  const double reference =
      std::max(airy_exponent_re(lower, x), airy_exponent_re(upper, x));

  std::vector<AiryContourPiece> pieces;
  pieces.push_back({lower, dir_down, ray_length(lower, dir_down, x, reference)});
  if (d > 0.0) pieces.push_back({lower, kI, 2.0 * d});
  pieces.push_back({upper, dir_up, ray_length(upper, dir_up, x, reference)});

  const double curvature = std::max(1.0, std::sqrt(2.0 * std::abs(s0)));
  const double oscillation = std::max(1.0, std::abs(x));

  cplx sum_ai = 0.0, sum_aip = 0.0;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const auto& piece = pieces[p];
    const bool vertical = (d > 0.0 && p == 1);
    const double width = vertical ? std::min(0.5, 4.0 / oscillation) : std::min(0.5, 1.5 / curvature);
    const int panels = std::max(1, static_cast<int>(std::ceil(piece.length / width))) * refine;
    const GaussRule rule = composite_rule(0.0, piece.length, panels, 20);
    const std::size_t n = rule.x.size();
    std::vector<double> re_a(n), im_a(n), re_d(n), im_d(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx t = piece.start + rule.x[i] * piece.direction;
      const cplx e = std::exp(t * t * t / 3.0 - x * t - reference) * piece.direction;
      re_a[i] = e.real();
      im_a[i] = e.imag();
      const cplx ed = -t * e;
      re_d[i] = ed.real();
      im_d[i] = ed.imag();
    }
    // The downward ray is traversed towards its start point.
    const double sign = (p == 0) ? -1.0 : 1.0;
    sum_ai += sign * simd::weighted_sum(rule.w.data(), re_a.data(), im_a.data(), n);
    sum_aip += sign * simd::weighted_sum(rule.w.data(), re_d.data(), im_d.data(), n);
  }
  const double scale = std::exp(reference);
  const cplx factor = scale / (2.0 * kPi * kI);
  return {sum_ai * factor, sum_aip * factor};
}

}  // namespace

AiryPair airy_pair(cplx x) {
  if (std::abs(x) > 1000.0) throw RangeError("airy: |x| > 1000 is outside the supported range");
  AiryPair previous = airy_contour(x, 1);
  for (int refine = 2; refine <= 64; refine *= 2) {
    AiryPair next = airy_contour(x, refine);
    const double scale = std::max(std::abs(next.ai), std::numeric_limits<double>::min());
    const double scale_d = std::max(std::abs(next.aip), std::numeric_limits<double>::min());
    if (std::abs(next.ai - previous.ai) <= 1e-14 * scale &&
        std::abs(next.aip - previous.aip) <= 1e-14 * scale_d) {
      return next;
    }
    // Values far below the contour maximum only carry absolute accuracy.
    if (std::abs(next.ai - previous.ai) <= 1e-300 && std::abs(next.aip - previous.aip) <= 1e-300) {
      return next;
    }
    previous = next;
  }
  return previous;
}

cplx airy(cplx x) { return airy_pair(x).ai; }

AiryPair airy_pair_real(double x) {
  AiryPair p = airy_pair(cplx(x, 0.0));
  return {cplx(p.ai.real(), 0.0), cplx(p.aip.real(), 0.0)};
}

double airy(double x) { return airy_pair(cplx(x, 0.0)).ai.real(); }

// ---------------------------------------------------------------------------

cplx b_function(cplx z, int nodes_per_panel) {
  if (std::abs(z) >= 1.0) throw DomainError("prefactors: requires |z| < 1");
  if (z == cplx(0.0)) return 0.0;
  // Panels graded towards t = 1, where Li_{1/2}(z t) varies fastest for |z| near 1.
  std::vector<double> edges{0.0, 0.25, 0.5};
  while (edges.back() < 1.0 - 1e-4) edges.push_back(0.5 * (1.0 + edges.back()));
  edges.push_back(1.0);
  const GaussRule rule = panel_rule(edges, nodes_per_panel);
  const std::size_t n = rule.x.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = rule.x[i];
    const cplx li = polylog(kLiHalf, z * t);
    const cplx f = li * li / t;
    re[i] = f.real();
    im[i] = f.imag();
  }
  return simd::weighted_sum(rule.w.data(), re.data(), im.data(), n) / (4.0 * kPi);
}

Prefactors prefactors(cplx z) {
  if (std::abs(z) >= 1.0) throw DomainError("prefactors: requires |z| < 1");
  if (z == cplx(0.0)) return {0.0, 0.0, 0.0, 0.0};
  Prefactors p;
  p.A1 = -polylog(kLiThreeHalves, z) / kSqrt2Pi;
  p.A2 = -polylog(kLiFiveHalves, z) / kSqrt2Pi;
  p.A3 = -0.25 * std::log(1.0 - z);
  p.B = b_function(z);
  return p;
}

}  // namespace relaxtime
