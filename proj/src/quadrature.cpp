#include "relaxtime/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace relaxtime {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, long double x, long double& p, long double& dp) {
  long double p0 = 1.0L, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = (n == 0) ? 1.0L : p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0L);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GaussRule>();
  rule->x.resize(n);
  rule->w.resize(n);
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule->x[i], &rule->w[i],
                                  table);
  }
  gsl_integration_glfixed_table_free(table);
  // The tabulated nodes lose accuracy for large n; polish them with Newton steps in extended
  // precision and recompute the weights.
  if (n > 1) {
    for (int i = 0; i < n; ++i) {
      long double x = rule->x[i], p = 0.0L, dp = 0.0L;
      for (int it = 0; it < 3; ++it) {
        legendre(n, x, p, dp);
        x -= p / dp;
      }
      legendre(n, x, p, dp);
      rule->x[i] = static_cast<double>(x);
      rule->w[i] = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
    }
  }
  const GaussRule& ref = *rule;
  cache.emplace(n, std::move(rule));
  return ref;
}

GaussRule panel_rule(const std::vector<double>& edges, int nodes_per_panel) {
  const GaussRule& base = gauss_legendre(nodes_per_panel);
  GaussRule out;
  if (edges.size() < 2) return out;
  out.x.reserve((edges.size() - 1) * nodes_per_panel);
  out.w.reserve((edges.size() - 1) * nodes_per_panel);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (int i = 0; i < nodes_per_panel; ++i) {
      out.x.push_back(mid + half * base.x[i]);
      out.w.push_back(half * base.w[i]);
    }
  }
  return out;
}

GaussRule composite_rule(double a, double b, int panels, int nodes_per_panel) {
  std::vector<double> edges(panels + 1);
  for (int p = 0; p <= panels; ++p) edges[p] = a + (b - a) * p / panels;
  return panel_rule(edges, nodes_per_panel);
}

HalfLineRule half_line_rule(int m, double c) {
  const GaussRule& base = gauss_legendre(m);
  HalfLineRule rule;
  rule.m = m;
  rule.c = c;
  rule.t.resize(m);
  rule.w.resize(m);
  for (int i = 0; i < m; ++i) {
    const double u = base.x[i];
    rule.t[i] = c * (1.0 + u) / (1.0 - u);
    rule.w[i] = base.w[i] * 2.0 * c / ((1.0 - u) * (1.0 - u));
  }
  return rule;
}

}  // namespace relaxtime
