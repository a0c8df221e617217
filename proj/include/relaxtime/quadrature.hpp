#pragma once

#include <cstddef>
#include <vector>

namespace relaxtime {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Cached, thread-safe access to an n-point Gauss-Legendre rule.
const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre rule on [a, b] split into `panels` equal panels.
GaussRule composite_rule(double a, double b, int panels, int nodes_per_panel);

// Composite rule over an explicit list of panel edges.
GaussRule panel_rule(const std::vector<double>& edges, int nodes_per_panel);

// Nystrom rule on (0, inf): Gauss-Legendre nodes mapped by t = c (1+u)/(1-u).
struct HalfLineRule {
  std::vector<double> t;
  std::vector<double> w;
  int m = 0;
  double c = 1.0;
};

HalfLineRule half_line_rule(int m, double c = 1.0);

}  // namespace relaxtime
