#include "relaxtime/riemann_sheet.hpp"

#include <algorithm>
#include <cmath>

#include "relaxtime/bethe.hpp"
#include "relaxtime/quadrature.hpp"
#include "relaxtime/simd.hpp"

namespace relaxtime {

namespace {

cplx int_pow(cplx base, int n) {
  if (n < 0) return 1.0 / int_pow(base, -n);
  cplx out = 1.0;
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

double boundary_product(cplx U) { return U.real() * U.imag(); }

}  // namespace

cplx u0_sheet(const SheetPoint& p) {
  const cplx z = p.z;
  cplx u0;
  if (z == cplx(0.0)) throw DomainError("u0_sheet: z = 0 is not a point of the surface");
  if (z.imag() == 0.0 && z.real() < 0.0) {
    if (p.side == Side::None) {
      throw DomainError("u0_sheet: z on (-inf, 0) needs a boundary side");
    }
    const double arg = (p.side == Side::Upper) ? kPi : -kPi;
    u0 = -std::sqrt(-2.0 * cplx(std::log(-z.real()), arg));
  } else if (z.imag() == 0.0 && z.real() > 1.0) {
    if (p.side == Side::None) {
      throw DomainError("u0_sheet: z on (1, inf) needs a boundary side");
    }
    const double b = std::sqrt(2.0 * std::log(z.real()));
    u0 = (p.side == Side::Upper) ? cplx(0.0, b) : cplx(0.0, -b);
  } else if (z == cplx(1.0)) {
    u0 = 0.0;
  } else {
    u0 = -std::sqrt(-2.0 * std::log(z));
  }
  return (p.sheet == Sheet::One) ? u0 : -u0;
}

SheetPoint sheet_point_from_coordinate(cplx U) {
  SheetPoint p;
  p.z = std::exp(-0.5 * U * U);
  p.sheet = (U.real() > 0.0) ? Sheet::Two : Sheet::One;
  const double prod = boundary_product(U);
  if (U.real() == 0.0 && U.imag() != 0.0) {
    p.z = cplx(p.z.real(), 0.0);
    p.sheet = Sheet::One;
    p.side = (U.imag() > 0.0) ? Side::Upper : Side::Lower;
  } else if (std::abs(std::abs(prod) - kPi) < 1e-12) {
    p.z = cplx(p.z.real(), 0.0);
    p.side = (prod > 0.0) ? Side::Lower : Side::Upper;
  }
  return p;
}

cplx polylog_uniformized(PolylogOrder s, cplx U) {
  const cplx mu = -0.5 * U * U;
  const int n = s.twice_s - 2;
  const double g = gamma_one_minus_s(s);
  if (std::abs(mu) <= kLogExpansionRadius) {
    if (s.twice_s == 1 && U == cplx(0.0)) {
      throw PoleError("polylog_sheet: Li_{1/2} has a pole at the branch point z = 1");
    }
    return g * int_pow(-U / kSqrt2, n) + polylog_regular_part(s, mu);
  }
  if (std::abs(boundary_product(U)) >= kPi) {
    throw DomainError("polylog_sheet: coordinate lies outside the surface");
  }
  if (U.real() == 0.0) {
    throw DomainError("polylog_sheet: gluing line outside the expansion disk is not supported");
  }
  cplx value = polylog(s, std::exp(mu));
  if (U.real() > 0.0) value -= 2.0 * g * int_pow(U / kSqrt2, n);
  return value;
}

cplx polylog_sheet(PolylogOrder s, const SheetPoint& p) {
  return polylog_uniformized(s, u0_sheet(p));
}

FF ff_from_coordinate(cplx U) {
  const cplx l3 = polylog_uniformized(kLiThreeHalves, U) / kSqrt2Pi;
  const cplx l5 = polylog_uniformized(kLiFiveHalves, U) / kSqrt2Pi;
  FF out;
  out.f1 = l3 - l5 - 2.0 * U - 2.0 / 3.0 * U * U * U;
  out.f2 = 2.0 * U - l3;
  return out;
}

FF ff_extensions(const SheetPoint& p) { return ff_from_coordinate(u0_sheet(p)); }

cplx g_form(cplx U) {
  const cplx L = polylog_uniformized(kLiHalf, U);
  return -(L * L * U + 4.0 * kSqrt2 * kSqrtPi * L) / (2.0 * kPi);
}

cplx g_residue(double radius, int nodes) {
  cplx sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const cplx U = std::polar(radius, 2.0 * kPi * (j + 0.5) / nodes);
    sum += g_form(U) * U;
  }
  return sum / static_cast<double>(nodes);
}

SurfacePath SurfacePath::through(const std::vector<SheetPoint>& points) {
  SurfacePath path;
  for (const auto& p : points) path.nodes.push_back(u0_sheet(p));
  return path;
}

SurfacePath default_path(const SheetPoint& p, cplx waypoint) {
  SurfacePath path;
  path.nodes.push_back(u0_sheet({cplx(kDefaultBaseZ, 0.0), Sheet::One, Side::None}));
  path.nodes.push_back(waypoint);
  path.nodes.push_back(u0_sheet(p));
  return path;
}

namespace {

cplx segment_integral(cplx a, cplx b, int panels) {
  const GaussRule rule = composite_rule(0.0, 1.0, panels, 20);
  const std::size_t n = rule.x.size();
  std::vector<double> re(n), im(n);
  const cplx d = b - a;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx U = a + rule.x[i] * d;
    const cplx f = (g_form(U) - 3.0 / U) * d;
    re[i] = f.real();
    im[i] = f.imag();
  }
  return simd::weighted_sum(rule.w.data(), re.data(), im.data(), n);
}

void check_segment(cplx a, cplx b) {
  constexpr int samples = 256;
  for (int i = 1; i < samples; ++i) {
    const cplx U = a + (b - a) * (static_cast<double>(i) / samples);
    if (std::abs(boundary_product(U)) >= kPi) {
      throw PathError("EE: path segment crosses the half-line (-inf, 0]");
    }
  }
  // Distance from the origin to the segment.
  const cplx d = b - a;
  const double t = std::clamp(-std::real(std::conj(d) * a) / std::norm(d), 0.0, 1.0);
  if (std::abs(a + t * d) < 1e-8) throw PathError("EE: path segment passes through z = 1");
}

}  // namespace

cplx EE_sheet_one(cplx z) {
  const cplx u0 = -std::sqrt(-2.0 * std::log(z));
  return std::exp(2.0 * b_function(z) - 2.0 * q_function(u0, z));
}

cplx EE(const SheetPoint& p, const SurfacePath& path) {
  if (path.nodes.size() < 2) throw PathError("EE: a path needs at least two nodes");
  const cplx Ua = path.nodes.front();
  const cplx za = std::exp(-0.5 * Ua * Ua);
  if (!(Ua.real() < 0.0 && std::abs(za) < 1.0 && std::abs(boundary_product(Ua)) < kPi)) {
    throw PathError("EE: path must start on sheet One inside the unit disk");
  }
  const cplx target = u0_sheet(p);
  if (std::abs(path.nodes.back() - target) > 1e-10 * std::max(1.0, std::abs(target))) {
    throw PathError("EE: path does not end at the evaluation point");
  }
  cplx exponent = 2.0 * b_function(za) - 2.0 * q_function(Ua, za);
  for (std::size_t s = 0; s + 1 < path.nodes.size(); ++s) {
    const cplx a = path.nodes[s];
    const cplx b = path.nodes[s + 1];
    if (a == b) continue;
    check_segment(a, b);
    cplx previous = segment_integral(a, b, 8);
    bool converged = false;
    for (int panels = 16; panels <= 512; panels *= 2) {
      const cplx next = segment_integral(a, b, panels);
      if (std::abs(next - previous) <= 1e-13 * std::max(1.0, std::abs(next))) {
        previous = next;
        converged = true;
        break;
      }
      previous = next;
    }
    if (!converged) throw ConvergenceError("EE: segment quadrature did not stabilize");
    exponent += previous + 3.0 * std::log(b / a);
  }
  return std::exp(exponent);
}

cplx EE(const SheetPoint& p) {
  const bool interior = p.sheet == Sheet::One && std::abs(p.z) < 1.0 && p.side == Side::None &&
                        !(p.z.imag() == 0.0 && p.z.real() <= 0.0);
  if (interior) return EE_sheet_one(p.z);
  return EE(p, default_path(p));
}

double harmonic_polylog_bracket(double delta) {
  if (!(delta > 0.0 && delta < 2.0)) throw DomainError("harmonic bracket needs 0 < delta < 2");
  std::vector<double> edges{delta};
  while (edges.back() * 2.0 < 2.0) edges.push_back(edges.back() * 2.0);
  edges.push_back(2.0);
  for (double t = 3.0; t <= 10.0; t += 1.0) edges.push_back(t);
  const GaussRule rule = panel_rule(edges, 24);
  const std::size_t n = rule.x.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = rule.x[i];
    f[i] = polylog(kLiHalf, cplx(std::exp(-0.5 * t * t), 0.0)).real();
  }
  return simd::weighted_sum(rule.w.data(), f.data(), n) + kSqrt2Pi * std::log(delta);
}

double harmonic_polylog_constant() {
  // On [0, 2] subtract the singular part sqrt(2 pi) / t of Li_{1/2}(e^{-t^2/2});
  // beyond t = 2 integrate the polylog directly.
  const GaussRule near = composite_rule(0.0, 2.0, 4, 24);
  std::vector<double> f(near.x.size());
  for (std::size_t i = 0; i < near.x.size(); ++i) {
    const double t = near.x[i];
    f[i] = polylog_regular_part(kLiHalf, cplx(-0.5 * t * t, 0.0)).real();
  }
  const double regular = simd::weighted_sum(near.w.data(), f.data(), f.size());
  const GaussRule far = composite_rule(2.0, 10.0, 16, 24);
  std::vector<double> g(far.x.size());
  for (std::size_t i = 0; i < far.x.size(); ++i) {
    const double t = far.x[i];
    g[i] = polylog(kLiHalf, cplx(std::exp(-0.5 * t * t), 0.0)).real();
  }
  const double tail = simd::weighted_sum(far.w.data(), g.data(), g.size());
  return regular + tail + kSqrt2Pi * std::log(2.0);
}

cplx gamma1_coordinate(double t) { return cplx(t, -kSqrtPi); }

std::vector<CurveSample> f1_on_gamma1(int samples) {
  if (samples < 2) throw DomainError("f1_on_gamma1: need at least two samples");
  std::vector<CurveSample> out(samples);
  const double a = -kSqrtPi;
  const double b = 0.5 * kSqrtPi;
  for (int i = 0; i < samples; ++i) {
    const double t = a + (b - a) * i / (samples - 1);
    out[i] = {t, ff_from_coordinate(gamma1_coordinate(t)).f1.real()};
  }
  return out;
}

}  // namespace relaxtime
