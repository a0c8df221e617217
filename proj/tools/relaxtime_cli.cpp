#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaxtime/distributions.hpp"
#include "relaxtime/parallel.hpp"
#include "relaxtime/riemann_sheet.hpp"
#include "relaxtime/suites.hpp"

namespace {

using namespace relaxtime;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitVerify = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a", or "a:b:step" with step > 0 and b >= a.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad grid value '" + item + "' in --x " + spec);
    }
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) throw UsageError("--x expects a or a:b:step, got " + spec);
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(step > 0.0) || !(b >= a)) throw UsageError("--x grid must be increasing with step > 0");
  const long n = std::lround(std::floor((b - a) / step + 1e-9)) + 1;
  if (n > 100000) throw UsageError("--x grid has too many points");
  std::vector<double> grid;
  for (long i = 0; i < n; ++i) grid.push_back(a + static_cast<double>(i) * step);
  return grid;
}

struct EvalConfig {
  std::string dist = "step";
  double tau = 1.0;
  double gamma = 0.0;
  std::string x = "0";
  std::string radius_mode = "auto";
  double radius = 0.0;
  int nodes = kDefaultCircleNodes;
  int node_cap = kCircleNodeCap;
  double tol = 1e-11;
  int nystrom = kDefaultNystromNodes;
  std::string output;
};

struct Row {
  double x;
  DistributionResult result;
};

CircleQuadrature quadrature_for(const EvalConfig& c, double x) {
  if (c.radius > 0.0) return {c.radius, c.nodes};
  RadiusMode mode = choose_radius_mode(x, c.tau);
  if (c.radius_mode == "generic") mode = RadiusMode::Generic;
  if (c.radius_mode == "small-tau") mode = RadiusMode::SmallTau;
  if (c.radius_mode == "tail") mode = RadiusMode::Tail;
  if (c.radius_mode == "large-tau") mode = RadiusMode::LargeTau;
  return {default_radius(mode, c.tau, x), c.nodes};
}

Row evaluate(const EvalConfig& c, double x) {
  const CircleOptions options{c.node_cap, c.tol};
  if (c.dist == "step") return {x, F_step(x, c.tau, c.gamma, quadrature_for(c, x), options)};
  if (c.dist == "flat") return {x, F_flat(x, c.tau, quadrature_for(c, x), options)};
  if (c.dist == "gue") return {x, F_gue_result(x)};
  if (c.dist == "goe") return {x, F_goe_result(x)};
  return {x, F_kpz_product(x, c.tau, c.gamma, c.nystrom)};
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot open output file " + path);
  return file;
}

int run_eval(const EvalConfig& c) {
  if (!(c.tau > 0.0)) throw UsageError("--tau must be positive");
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.nodes < 16 || (c.nodes & (c.nodes - 1)) != 0) throw UsageError("--nodes must be a power of two >= 16");
  if (c.node_cap < c.nodes) throw UsageError("--node-cap must be at least --nodes");
  if (c.radius != 0.0 && !(c.radius > 0.0 && c.radius < 1.0)) throw UsageError("--radius must lie in (0, 1)");
  const std::vector<double> grid = parse_grid(c.x);

  std::vector<Row> rows;
  for (double x : grid) rows.push_back(evaluate(c, x));

  std::ofstream file;
  std::ostream& out = open_output(c.output, file);
  out << "# relaxtime " << kVersion << "\n";
  out << "# command eval dist=" << c.dist << " tau=" << c.tau << " gamma=" << c.gamma << " x=" << c.x << "\n";
  out << "# radius_mode=" << (c.radius > 0.0 ? "fixed" : c.radius_mode) << " nodes=" << c.nodes
      << " node_cap=" << c.node_cap << " tol=" << c.tol << " nystrom=" << c.nystrom
      << " threads=" << thread_count() << "\n";
  out << "x,F,error_estimate,imag_residual,K,M,m,radius\n";
  char line[256];
  for (const Row& r : rows) {
    const auto& d = r.result.diagnostics;
    std::snprintf(line, sizeof(line), "%.10g,%.15g,%.3e,%.3e,%d,%d,%d,%.10g\n", r.x, r.result.value,
                  r.result.error_estimate, r.result.imag_residual, d.K, d.M, d.m, d.radius);
    out << line;
  }
  return kExitOk;
}

// Applies key=value lines from a config file to options not given on the command line.
void apply_config(CLI::App* cmd, const std::string& path) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error&) {
    throw UsageError("cannot read config file " + path);
  }
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--" || item.inputs.empty()) continue;
    CLI::Option* opt = cmd->get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config") throw UsageError("unknown config key " + item.name);
    if (opt->count() > 0) continue;
    try {
      for (const std::string& value : item.inputs) opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key " + item.name + ": " + e.what());
    }
  }
}

int run_verify(const std::string& suite, std::optional<double> gamma) {
  const std::vector<CheckResult> checks = run_suite(suite, SuiteOptions{gamma});
  std::cout << "# relaxtime " << kVersion << " verify " << suite << "\n";
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  const bool ok = all_pass(checks);
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kExitOk : kExitVerify;
}

int run_plotdata(const std::string& curve, int samples, const std::string& output) {
  if (curve != "f1-gamma1") throw UsageError("unknown curve " + curve);
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const std::vector<CurveSample> data = f1_on_gamma1(samples);
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  out << "# relaxtime " << kVersion << "\n";
  out << "# command plotdata curve=" << curve << " samples=" << samples
      << " t_range=[-sqrt(pi), sqrt(pi)/2]\n";
  out << "t,re_f1\n";
  char line[128];
  for (const CurveSample& s : data) {
    std::snprintf(line, sizeof(line), "%.12g,%.15g\n", s.t, s.value);
    out << line;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-time KPZ relaxation distributions on the periodic TASEP"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  EvalConfig eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a distribution on an x grid and print CSV");
  std::string eval_config;
  eval_cmd->add_option("--config", eval_config, "File of key=value lines overriding the defaults");
  eval_cmd->add_option("--dist", eval.dist, "Distribution")
      ->check(CLI::IsMember({"step", "flat", "gue", "goe", "kpz"}))
      ->capture_default_str();
  eval_cmd->add_option("--tau", eval.tau, "Scaled time")->capture_default_str();
  eval_cmd->add_option("--gamma", eval.gamma, "Scaled position")->capture_default_str();
  eval_cmd->add_option("--x", eval.x, "Value or grid a:b:step")->capture_default_str();
  eval_cmd->add_option("--radius-mode", eval.radius_mode, "Contour radius rule")
      ->check(CLI::IsMember({"auto", "generic", "small-tau", "tail", "large-tau"}))
      ->capture_default_str();
  eval_cmd->add_option("--radius", eval.radius, "Fixed contour radius in (0, 1)");
  eval_cmd->add_option("--nodes", eval.nodes, "Initial circle nodes")->capture_default_str();
  eval_cmd->add_option("--node-cap", eval.node_cap, "Largest circle node count")
      ->check(CLI::Range(16, kCircleNodeCap))
      ->capture_default_str();
  eval_cmd->add_option("--tol", eval.tol, "Circle convergence tolerance")->capture_default_str();
  eval_cmd->add_option("--nystrom", eval.nystrom, "Nystrom nodes for the kpz product")
      ->check(CLI::Range(8, 1024))
      ->capture_default_str();
  eval_cmd->add_option("-o,--output", eval.output, "Output file (stdout by default)");

  std::string suite;
  std::optional<double> verify_gamma;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--gamma", verify_gamma, "Restrict the tails suite to one gamma");

  std::string curve = "f1-gamma1";
  int samples = 401;
  std::string plot_output;
  CLI::App* plot_cmd = app.add_subcommand("plotdata", "Emit curve data for figures as CSV");
  std::string plot_config;
  plot_cmd->add_option("--config", plot_config, "File of key=value lines overriding the defaults");
  plot_cmd->add_option("--curve", curve, "Curve name")->check(CLI::IsMember({"f1-gamma1"}))->capture_default_str();
  plot_cmd->add_option("--samples", samples, "Number of samples")->capture_default_str();
  plot_cmd->add_option("-o,--output", plot_output, "Output file (stdout by default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) {
      if (!eval_config.empty()) apply_config(eval_cmd, eval_config);
      return run_eval(eval);
    }
    if (*verify_cmd) return run_verify(suite, verify_gamma);
    if (!plot_config.empty()) apply_config(plot_cmd, plot_config);
    return run_plotdata(curve, samples, plot_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitConvergence;
  }
}
