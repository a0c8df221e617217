#include "relaxtime/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "relaxtime/distributions.hpp"
#include "relaxtime/fredholm.hpp"
#include "relaxtime/kernels.hpp"
#include "relaxtime/rhp_integrable.hpp"
#include "relaxtime/riemann_sheet.hpp"
#include "relaxtime/special_functions.hpp"
#include "relaxtime/tails.hpp"

namespace relaxtime {

namespace {

std::string format(const char* fmt, ...) {
  char buffer[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buffer, sizeof(buffer), fmt, args);
  va_end(args);
  return buffer;
}

bool factors_in_window(const std::vector<double>& factors) {
  return std::all_of(factors.begin(), factors.end(), [](double f) { return f >= 3.5 && f <= 4.5; });
}

std::string series_detail(const std::vector<double>& h, const std::vector<double>& residual) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += format("%sh=%g:%.3e", i ? " " : "", h[i], residual[i]);
  }
  for (std::size_t i = 0; i + 1 < residual.size(); ++i) {
    out += format(" factor=%.3f", residual[i] / residual[i + 1]);
  }
  return out;
}

std::vector<double> ratios(const std::vector<double>& r) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) out.push_back(r[i] / r[i + 1]);
  return out;
}

BetheSet roots_for(cplx z, const ExponentParams& p) {
  return adequate_roots(enumerate_roots(z, kDefaultTruncation), p);
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> check_operator_identities(unsigned seed, int points) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> tau_d(0.5, 2.0), gamma_d(-0.5, 0.5), x_d(-1.0, 2.0),
      r_d(0.3, 0.6), arg_d(-kPi, kPi);
  double worst_t = 0.0, worst_h = 0.0, worst_flat = 0.0;
  const HalfLineRule rule = half_line_rule(kDefaultNystromNodes, 1.0);
  for (int i = 0; i < points; ++i) {
    const ExponentParams p{tau_d(rng), gamma_d(rng), x_d(rng)};
    const cplx z = std::polar(r_d(rng), arg_d(rng));
    const BetheSet bethe = roots_for(z, p);
    const cplx det_k = det_discrete(build_step_Kz(bethe, p)).value;
    const cplx det_t = det_T_product(p, bethe, rule);
    const X1Data x1 = solve_X1(bethe, p);
    worst_t = std::max(worst_t, std::abs(det_k - det_t));
    worst_h = std::max(worst_h, std::abs(det_k - std::exp(x1.log_det)));
    const ExponentParams flat{p.tau, 0.0, p.x};
    const BetheSet flat_bethe = adequate_roots(bethe, {0.5 * p.tau, 0.0, 0.5 * p.x}, 1e-17, true);
    const cplx det_flat = std::exp(flat_log_det(flat_bethe, p.tau, p.x));
    const CMatrix T0 = build_T_product(flat, flat_bethe, rule).B;
    worst_flat = std::max(worst_flat, std::abs(det_flat - det_i_minus(T0).value));
  }
  return {
      {"det(I-K_z) = det(I-T_{-g}T_g)", worst_t <= 1e-7,
       format("max diff %.3e over %d points (limit 1e-7)", worst_t, points)},
      {"det(I-K_z) = det(I-H)", worst_h <= 1e-8,
       format("max diff %.3e over %d points (limit 1e-8)", worst_h, points)},
      {"det(I-K1|x/2,t/2) = det(I-T_0)", worst_flat <= 1e-7,
       format("max diff %.3e over %d points (limit 1e-7)", worst_flat, points)},
  };
}

std::vector<CheckResult> check_cdf_properties() {
  std::vector<CheckResult> out;
  double worst_imag = 0.0;
  auto track = [&](const DistributionResult& r) {
    worst_imag = std::max(worst_imag, std::abs(r.imag_residual));
    return r.value;
  };
  const CircleQuadrature quad{0.5, kDefaultCircleNodes};
  std::vector<double> values;
  bool monotone = true;
  for (int i = 0; i < 11; ++i) {
    const double x = -2.5 + 0.5 * i;
    values.push_back(track(F_step(x, 1.0, 0.0, quad)));
    if (i > 0 && values[i] < values[i - 1]) monotone = false;
  }
  out.push_back({"F_step monotone on 11-point grid", monotone,
                 format("F(-2.5)=%.6f F(0)=%.6f F(2.5)=%.6f", values.front(), values[5], values.back())});
  const double f0 = track(F_step(0.0, 1.0, 0.2, quad));
  const double f1 = track(F_step(0.0, 1.0, 1.2, quad));
  out.push_back({"gamma-periodicity", std::abs(f0 - f1) <= 1e-8,
                 format("F(0;1,0.2)=%.14f diff %.3e (limit 1e-8)", f0, std::abs(f0 - f1))});
  const double r4 = track(F_step(0.0, 1.0, 0.2, {0.4, kDefaultCircleNodes}));
  const double r6 = track(F_step(0.0, 1.0, 0.2, {0.6, kDefaultCircleNodes}));
  out.push_back({"radius independence R=0.4 vs 0.6", std::abs(r4 - r6) <= 1e-8,
                 format("diff %.3e (limit 1e-8)", std::abs(r4 - r6))});
  out.push_back({"imaginary residuals", worst_imag <= 1e-9,
                 format("max |imag| %.3e (limit 1e-9)", worst_imag)});
  return out;
}

std::vector<CheckResult> check_small_tau() {
  const std::vector<double> taus{0.4, 0.2, 0.1};
  std::vector<double> gaps;
  for (double tau : taus) {
    const CircleQuadrature quad{default_radius(RadiusMode::SmallTau, tau, 0.0), kDefaultCircleNodes};
    double gap = 0.0;
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const double f = F_step(std::cbrt(tau) * x, tau, 0.0, quad).value;
      gap = std::max(gap, std::abs(f - F_gue(x)));
    }
    gaps.push_back(gap);
  }
  const bool decreasing = gaps[0] > gaps[1] && gaps[1] > gaps[2];
  return {{"small-tau gap to F_GUE", decreasing && gaps[2] <= 5e-3,
           format("sup gaps tau=0.4:%.3e tau=0.2:%.3e tau=0.1:%.3e (strictly decreasing, last <= 5e-3)",
                  gaps[0], gaps[1], gaps[2])}};
}

std::vector<CheckResult> check_large_tau() {
  std::vector<CheckResult> out;
  const CircleQuadrature quad{default_radius(RadiusMode::LargeTau, 0.0, 0.0), kDefaultCircleNodes};
  const double c = std::pow(kPi, 0.25) / kSqrt2;
  for (bool flat : {false, true}) {
    std::vector<std::vector<double>> gaps;
    for (double tau : {8.0, 15.0}) {
      std::vector<double> row;
      for (double x : {-1.0, 0.0, 1.0}) {
        const double arg = -tau + c * x * std::sqrt(tau);
        const double f = flat ? F_flat(arg, tau, quad).value : F_step(arg, tau, 0.0, quad).value;
        row.push_back(std::abs(f - gaussian_cdf(x)));
      }
      gaps.push_back(row);
    }
    bool decreasing = true;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      decreasing = decreasing && gaps[1][i] < gaps[0][i];
      worst = std::max(worst, gaps[1][i]);
    }
    out.push_back({flat ? "large-tau flat gap to normal" : "large-tau step gap to normal",
                   decreasing && worst <= 0.05,
                   format("tau=8: (%.4f, %.4f, %.4f) tau=15: (%.4f, %.4f, %.4f) (decreasing, <= 0.05 at tau=15)",
                          gaps[0][0], gaps[0][1], gaps[0][2], gaps[1][0], gaps[1][1], gaps[1][2])});
  }
  double worst = 0.0;
  const double tau = 10.0;
  for (double x : {-1.0, 0.0, 1.0}) {
    const double f = F_step(-tau + c * x * std::sqrt(tau), tau, 0.0, quad).value;
    worst = std::max(worst, std::abs(f - F_large_tau_integral(x, tau)));
  }
  out.push_back({"contour reduction vs F_step at tau=10", worst <= 5e-3,
                 format("max diff %.3e (limit 5e-3)", worst)});
  return out;
}

std::vector<CheckResult> check_right_tail(std::optional<double> gamma) {
  std::vector<CheckResult> out;
  std::vector<double> gammas{0.0, 0.25, 0.5};
  if (gamma) gammas = {*gamma};
  for (double g : gammas) {
    const TailRatio r3 = tail_ratio({1.0, g, 3.0, 0.0, false});
    const TailRatio r4 = tail_ratio({1.0, g, 4.0, 0.0, false});
    const double lo = r4.expected == 2.0 ? 1.7 : 0.85;
    const double hi = r4.expected == 2.0 ? 2.3 : 1.15;
    const bool shrinks = std::abs(r4.ratio - r4.expected) < std::abs(r3.ratio - r3.expected);
    out.push_back({format("tail ratio gamma=%g", g), r4.ratio >= lo && r4.ratio <= hi && shrinks,
                   format("x=3: %.4f x=4: %.4f expected %.0f window [%.2f, %.2f] at x=4, 1-F(4)=%.3e",
                          r3.ratio, r4.ratio, r4.expected, lo, hi, r4.one_minus_F)});
  }
  if (!gamma) {
    const TailRatio r3 = tail_ratio({1.0, 0.0, 3.0, 0.0, true});
    const TailRatio r4 = tail_ratio({1.0, 0.0, 4.0, 0.0, true});
    const bool shrinks = std::abs(r4.ratio - 1.0) < std::abs(r3.ratio - 1.0);
    out.push_back({"tail ratio flat", r4.ratio >= 0.85 && r4.ratio <= 1.15 && shrinks,
                   format("x=3: %.4f x=4: %.4f expected 1 window [0.85, 1.15] at x=4, 1-F(4)=%.3e",
                          r3.ratio, r4.ratio, r4.one_minus_F)});
  }
  return out;
}

std::vector<CheckResult> check_tail_oracles() {
  auto scaled = [](double x) {
    return calB(x, 0.0) * 16.0 * kPi * std::pow(x, 1.5) * std::exp(4.0 * std::pow(x, 1.5) / 3.0);
  };
  const double b4 = scaled(4.0);
  const double b9 = scaled(9.0);
  const double a20 = airy_like_A(20.0, 0.0, 1.0) / airy(20.0);
  return {
      {"B(4;0) asymptotic ratio", b4 >= 0.9 && b4 <= 1.1, format("%.6f window [0.9, 1.1]", b4)},
      {"B(9;0) asymptotic ratio", b9 >= 0.97 && b9 <= 1.03, format("%.6f window [0.97, 1.03]", b9)},
      {"A(20;0) / Ai(20)", std::abs(a20 - 1.0) <= 1e-3, format("%.9f window 1 +- 1e-3", a20)},
  };
}

std::vector<CheckResult> check_tail_trace() {
  const double x = 6.0, tau = 1.0, gamma = 0.5;
  const TraceLaurent L = trace_laurent(x, tau, gamma);
  const TailTraceReference ref = tail_trace_reference(x, tau, gamma);
  const double e = std::exp(1.0 / (96.0 * tau * tau));
  const double c0 = L.c0.real() / (2.0 * ref.b);
  const double cp = L.c_plus1.real() / (ref.b_plus / e);
  const double cm = L.c_minus1.real() / (ref.b_minus * e);
  auto ok = [](double v) { return std::abs(v - 1.0) <= 0.1; };
  return {
      {"trace z^0 coefficient / 2b", ok(c0), format("%.4f window 1 +- 0.1", c0)},
      {"trace z^1 coefficient / e^{-1/96} b_+", ok(cp), format("%.4f window 1 +- 0.1", cp)},
      {"trace z^-1 coefficient / e^{1/96} b_-", ok(cm), format("%.4f window 1 +- 0.1", cm)},
  };
}

std::vector<CheckResult> check_integrable_periodic() {
  std::vector<CheckResult> out;
  const cplx z = 0.35;
  const ExponentParams a{1.0, 0.2, 1.0};
  const BetheSet bethe = roots_for(z, a);
  {
    const double h = 1e-3;
    auto ld = [&](double e) { return solve_X1(bethe, {a.tau, a.gamma, a.x + e}).log_det; };
    auto qf = [&](double e) { return solve_X1(bethe, {a.tau, a.gamma, a.x + e}).q; };
    const X1Data here = solve_X1(bethe, a);
    const cplx dld = (ld(-2 * h) - 8.0 * ld(-h) + 8.0 * ld(h) - ld(2 * h)) / (12.0 * h);
    const cplx qx = (qf(-2 * h) - 8.0 * qf(-h) + 8.0 * qf(h) - qf(2 * h)) / (12.0 * h);
    const double deform = std::abs(dld - here.q);
    const double qxpr = std::abs(qx - here.p * here.r) / std::abs(here.p * here.r);
    out.push_back({"deformation d_x log det(I-H) = q", deform <= 1e-5,
                   format("diff %.3e (limit 1e-5)", deform)});
    out.push_back({"q_x = p r", qxpr <= 1e-4, format("relative diff %.3e (limit 1e-4)", qxpr)});
    const double trace = std::abs(here.q + here.q22);
    out.push_back({"X1 trace-free", trace <= 1e-10, format("|q + X1_22| = %.3e (limit 1e-10)", trace)});
    const double nil = nilpotency_defect(build_H(bethe, a));
    out.push_back({"residue matrices nilpotent", nil == 0.0, format("max |R(s)^2| = %.3e", nil)});
    const BetheSet wider = extend_roots(bethe, bethe.K + 4);
    const X1Data w = solve_X1(wider, a);
    const double stab = std::max({std::abs(w.q - here.q), std::abs(w.p - here.p), std::abs(w.r - here.r)});
    out.push_back({"truncation stability K -> K+4", stab < 1e-7, format("max change %.3e (limit 1e-7)", stab)});
  }
  {
    const ExponentParams s{1.0, 0.3, 0.5};
    const SymmetryDefect d = symmetry_check(roots_for(z, s), s);
    out.push_back({"symmetry p(g) = -r(-g), q(g) = q(-g)", d.p_plus_r <= 1e-7 && d.q_diff <= 1e-7,
                   format("|p+r|=%.3e |dq|=%.3e (limit 1e-7)", d.p_plus_r, d.q_diff)});
  }
  {
    double worst = 0.0;
    const std::vector<std::pair<ExponentParams, cplx>> pts{
        {{1.0, 0.2, 0.5}, 0.35}, {{0.7, -0.3, 0.0}, std::polar(0.5, 2.0)}, {{1.5, 0.1, 1.0}, cplx(0.0, 0.45)}};
    for (const auto& [p, zz] : pts) {
      const BetheSet b = roots_for(zz, p);
      const cplx pr = u_per(b, p);
      const double h = 1e-3;
      auto ld = [&](double e) { return det_discrete(build_step_Kz(b, {p.tau, p.gamma, p.x + e})).log_value; };
      const cplx fd = (-ld(2 * h) + 16.0 * ld(h) - 30.0 * ld(0.0) + 16.0 * ld(-h) - ld(-2 * h)) / (12.0 * h * h);
      worst = std::max(worst, std::abs(fd - pr) / std::abs(pr));
    }
    out.push_back({"p r = d_xx log det(I-K_z)", worst <= 1e-4,
                   format("max relative diff %.3e over 3 points (limit 1e-4)", worst)});
  }
  {
    const BetheSet b = roots_for(0.4, {1.0, 0.0, 8.0});
    const X1Data far = solve_X1(b, {1.0, 0.0, 8.0});
    out.push_back({"X1 vanishes at x=8", std::abs(far.q) <= 1e-6, format("|q| = %.3e (limit 1e-6)", std::abs(far.q))});
  }
  const ExponentParams c{1.0, 0.2, 0.5};
  const BetheSet cb = roots_for(z, c);
  for (PDEKind kind : {PDEKind::MKdVp, PDEKind::MKdVr, PDEKind::Heatp, PDEKind::Heatr,
                       PDEKind::NonlocalMKdV, PDEKind::NonlocalHeat, PDEKind::KPper}) {
    const ResidualSeries s = pde_residual(kind, cb, c);
    out.push_back({pde_name(kind) + " residual O(h^2)", factors_in_window(s.factors()),
                   series_detail(s.h, s.residual) + " (factors in [3.5, 4.5])"});
  }
  {
    const ResidualSeries s = pde_residual(PDEKind::KPkpz, cb, {1.0, 0.4, 0.0});
    const bool ok = factors_in_window(s.factors()) && s.residual.back() <= 1e-3;
    out.push_back({"kp-kpz residual O(h^2)", ok,
                   series_detail(s.h, s.residual) + " (factors in [3.5, 4.5], finest <= 1e-3)"});
  }
  return out;
}

std::vector<CheckResult> check_integrable_flat() {
  const FlatCheck f = flat_integrable_check(1.0, 1.0, 0.35);
  const double ident = std::abs(f.dlogdet - f.half_r_plus_q);
  const double miura = std::abs(f.U - f.miura);
  return {
      {"flat d_x log det = (R+Q)/2", ident <= 1e-5, format("diff %.3e (limit 1e-5)", ident)},
      {"flat Miura U = R_x - R^2", miura <= 1e-4, format("diff %.3e (limit 1e-4)", miura)},
      {"flat mKdV residual O(h^2)", factors_in_window(ratios(f.mkdv_residual)),
       series_detail(f.h, f.mkdv_residual) + " (factors in [3.5, 4.5])"},
      {"flat KdV residual O(h^2)", factors_in_window(ratios(f.kdv_residual)),
       series_detail(f.h, f.kdv_residual) + " (factors in [3.5, 4.5])"},
  };
}

std::vector<CheckResult> check_soliton_controls() {
  const double kp = kp_soliton_residual(1.0, 0.3, 0.2, 1e-3);
  const double kdv = kdv_soliton_residual(1.0, 0.3, 0.2, 1e-3);
  const double kp_half = kp_soliton_residual(1.0, 0.3, 0.2, 5e-4);
  return {
      {"KP soliton control at h=1e-3", kp <= 1e-6 && kp / kp_half >= 3.5 && kp / kp_half <= 4.5,
       format("%.3e (limit 1e-6), factor under halving %.3f", kp, kp / kp_half)},
      {"KdV soliton control at h=1e-3", kdv <= 1e-6, format("%.3e (limit 1e-6)", kdv)},
  };
}

std::vector<CheckResult> check_riemann_surface() {
  std::vector<CheckResult> out;
  const cplx res = g_residue();
  out.push_back({"residue of g at z=1", std::abs(res - 3.0) <= 1e-6,
                 format("%.10f%+.2ei (target 3 +- 1e-6)", res.real(), res.imag())});
  for (double y : {0.05, 0.1}) {
    const SheetPoint p{cplx(0.0, y), Sheet::Two, Side::None};
    const cplx U = u0_sheet(p);
    const double defect = std::abs(EE(p) / (-4.0 * U * U * U * U) - 1.0);
    out.push_back({format("E/(-4 u0^4) at z=%gi sheet Two", y), defect <= 10.0 * y * y,
                   format("defect %.3e (limit %.3e)", defect, 10.0 * y * y)});
  }
  const double h = harmonic_polylog_constant();
  const double target = -std::sqrt(kPi / 2.0) * std::log(2.0);
  out.push_back({"harmonic polylog constant", std::abs(h - target) <= 1e-6,
                 format("%.9f vs %.9f", h, target)});
  const std::vector<CurveSample> curve = f1_on_gamma1(801);
  const auto best = std::max_element(curve.begin(), curve.end(),
                                     [](const CurveSample& a, const CurveSample& b) { return a.value < b.value; });
  out.push_back({"maximum of re f1 on gamma_1", std::abs(best->value + 0.104065) <= 1e-4,
                 format("%.8f at t=%.6f (target -0.104065 +- 1e-4)", best->value, best->t)});
  const double up = ff_extensions({cplx(-1.0, 0.0), Sheet::One, Side::Upper}).f1.real();
  const double lo = ff_extensions({cplx(-1.0, 0.0), Sheet::One, Side::Lower}).f1.real();
  out.push_back({"re f1(-1 +- i0)", std::abs(up + 3.8388) <= 1e-3 && std::abs(lo + 3.8388) <= 1e-3,
                 format("+i0: %.7f -i0: %.7f (target -3.8388 +- 1e-3)", up, lo)});
  const double l3 = polylog(kLiThreeHalves, -1.0).real();
  const double l5 = polylog(kLiFiveHalves, -1.0).real();
  out.push_back({"Li_{3/2}(-1), Li_{5/2}(-1)", std::abs(l3 + 0.7651) <= 1e-4 && std::abs(l5 + 0.8671) <= 1e-4,
                 format("%.10f %.10f", l3, l5)});
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "cdf",  "small-tau", "large-tau",
                                              "tails",      "pde",  "flat",      "surface"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options) {
  auto join = [](std::vector<CheckResult> a, const std::vector<CheckResult>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (suite == "identities") return check_operator_identities();
  if (suite == "cdf") return check_cdf_properties();
  if (suite == "small-tau") return check_small_tau();
  if (suite == "large-tau") return check_large_tau();
  if (suite == "tails") {
    if (options.gamma) return check_right_tail(options.gamma);
    return join(join(check_right_tail(), check_tail_oracles()), check_tail_trace());
  }
  if (suite == "pde") return join(check_soliton_controls(), check_integrable_periodic());
  if (suite == "flat") return check_integrable_flat();
  if (suite == "surface") return check_riemann_surface();
  throw DomainError("unknown verification suite: " + suite);
}

}  // namespace relaxtime
