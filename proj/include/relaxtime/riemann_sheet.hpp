#pragma once

#include <vector>

#include "relaxtime/common.hpp"
#include "relaxtime/special_functions.hpp"

namespace relaxtime {

// The surface is parametrized by the uniformizing coordinate U with z = e^{-U^2/2}:
// sheet One is Re U < 0, sheet Two is Re U > 0, and the two sheets are glued along
// Re U = 0 (the segment z in (1, inf)). Points with |Re U Im U| = pi lie over the
// excluded half-line z in (-inf, 0].

enum class Sheet { One, Two };
// Boundary side for base points on the excluded half-lines (-inf, 0) and (1, inf).
enum class Side { None, Upper, Lower };

struct SheetPoint {
  cplx z;
  Sheet sheet = Sheet::One;
  Side side = Side::None;
};

// U_0(p): u_0(z) = -(-2 log z)^{1/2} on sheet One and -u_0(z) on sheet Two.
cplx u0_sheet(const SheetPoint& p);

// Inverse map: the sheet point for a coordinate U (side is set on the boundaries).
SheetPoint sheet_point_from_coordinate(cplx U);

// Continuation of Li_s in the uniformizing coordinate.
cplx polylog_uniformized(PolylogOrder s, cplx U);
cplx polylog_sheet(PolylogOrder s, const SheetPoint& p);

struct FF {
  cplx f1;
  cplx f2;
};
// f1 = (L_{3/2} - L_{5/2}) / sqrt(2 pi) - 2U - 2U^3/3, f2 = 2U - L_{3/2} / sqrt(2 pi).
FF ff_from_coordinate(cplx U);
FF ff_extensions(const SheetPoint& p);

// The one-form g(z) dz written as G(U) dU; simple pole at U = 0 with residue 3.
cplx g_form(cplx U);

// (1 / 2 pi i) times the integral of G dU over the circle |U| = radius.
cplx g_residue(double radius = 0.5, int nodes = 256);

// Piecewise-straight path in the U coordinate. The first node must lie on sheet
// One inside the unit disk; the last node is the evaluation point.
struct SurfacePath {
  std::vector<cplx> nodes;

  static SurfacePath through(const std::vector<SheetPoint>& points);
};

inline constexpr double kDefaultBaseZ = 0.3;

// Default path: base point z = 0.3 on sheet One, waypoint U = waypoint, then p.
SurfacePath default_path(const SheetPoint& p, cplx waypoint = kI);

// E(p) = exp of the integral of g along the path, anchored at the base point by
// E = exp(2B(z) - 2Q(u_0(z))).
cplx EE(const SheetPoint& p, const SurfacePath& path);
// Closed form on sheet One with 0 < |z| < 1, default path otherwise.
cplx EE(const SheetPoint& p);
cplx EE_sheet_one(cplx z);

// lim_{delta -> 0} [ int_delta^inf Li_{1/2}(e^{-t^2/2}) dt + sqrt(2 pi) log delta ]
double harmonic_polylog_constant();
// The same bracket evaluated at a fixed delta.
double harmonic_polylog_bracket(double delta);

// The path gamma_1(t) = e^{-(t^2 - pi)/2 + i sqrt(pi) t}, i.e. U = t - i sqrt(pi).
cplx gamma1_coordinate(double t);

struct CurveSample {
  double t;
  double value;
};
// re f1 along gamma_1 for t in [-sqrt(pi), sqrt(pi)/2], `samples` points.
std::vector<CurveSample> f1_on_gamma1(int samples);

}  // namespace relaxtime
