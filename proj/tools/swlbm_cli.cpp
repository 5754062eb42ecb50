// Command-line front end: run cases, sample the exact Riemann solution,
// compare two runs and list the built-in experiments.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "swlbm/cases.hpp"
#include "swlbm/config.hpp"
#include "swlbm/errors.hpp"
#include "swlbm/metrics.hpp"
#include "swlbm/riemann.hpp"
#include "swlbm/runner.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitAbort = 2;

swlbm::CaseConfig load_case(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::stringstream text;
    text << in.rdbuf();
    return swlbm::parse_config(text.str());
  }
  if (auto builtin = swlbm::find_builtin(source)) return *builtin;
  throw swlbm::ConfigError("case", "'" + source + "' is neither a config file nor a built-in case");
}

swlbm::SolverKind parse_solver(const std::string& name) {
  if (name == "lbm") return swlbm::SolverKind::Lbm;
  if (name == "godunov") return swlbm::SolverKind::Godunov;
  if (name == "exact") return swlbm::SolverKind::Exact;
  throw swlbm::ConfigError("solver", "unknown solver '" + name + "'");
}

swlbm::Primitive1D parse_pair(const std::string& text, const std::string& flag) {
  swlbm::Primitive1D s;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> s.rho >> comma >> s.u) || comma != ',' || !in.eof()) {
    throw swlbm::ConfigError(flag, "expected 'rho,u', got '" + text + "'");
  }
  if (s.rho <= 0.0) throw swlbm::ConfigError(flag, "density must be positive");
  return s;
}

void print_report(const swlbm::RunReport& r) {
  std::printf("%s (%s): %ld steps to t = %.6g in %.2f s\n", r.name.c_str(), swlbm::to_string(r.solver).c_str(),
              r.steps, r.final_time, r.wall_seconds);
  std::printf("  mass drift %.3e, min rho %.6g\n", r.mass_drift, r.min_rho);
  if (r.mass_balance) std::printf("  mass balance residual %.3e\n", *r.mass_balance);
  for (const auto& [name, value] : r.metrics) std::printf("  %-28s %.10g\n", name.c_str(), value);
  for (const auto& [name, why] : r.unavailable) std::printf("  %-28s unavailable: %s\n", name.c_str(), why.c_str());
  for (const auto& w : r.warnings) std::printf("  warning: %s\n", w.c_str());
  for (const auto& p : r.manifest) std::printf("  wrote %s\n", p.string().c_str());
}

int cmd_run(const std::string& source, const std::string& out, const std::string& solver, int threads) {
  swlbm::CaseConfig cfg = load_case(source);
  if (!solver.empty()) cfg.solver = parse_solver(solver);
  if (threads > 0) cfg.threads = threads;
  swlbm::RunOptions options;
  if (!out.empty()) options.output_dir = out;
  const swlbm::RunReport report = swlbm::run_case(cfg, options);
  if (report.aborted) {
    std::fprintf(stderr, "error: %s\n", report.abort_reason.c_str());
    return kExitAbort;
  }
  print_report(report);
  const auto dir = swlbm::resolve_output_dir(cfg, options);
  const auto path = dir / (cfg.name + "_" + swlbm::to_string(cfg.solver) + "_report.json");
  std::ofstream(path) << swlbm::report_json(report) << '\n';
  std::printf("  wrote %s\n", path.string().c_str());
  return 0;
}

int cmd_exact(const std::string& left, const std::string& right, double time, int n, bool csv) {
  if (time <= 0.0) throw swlbm::ConfigError("--time", "must be positive");
  if (n < 1) throw swlbm::ConfigError("--cells", "must be positive");
  const swlbm::PhysParams params;
  const auto sol = swlbm::exact_riemann(parse_pair(left, "--left"), parse_pair(right, "--right"), params);
  const auto kind = [](swlbm::WaveKind k) { return k == swlbm::WaveKind::Shock ? "shock" : "rarefaction"; };
  if (!csv) {
    std::printf("rho* = %.15g\nu*   = %.15g\n", sol.rho_star(), sol.u_star());
    std::printf("left  %-11s speeds %.12g .. %.12g\n", kind(sol.left_wave()), sol.left_head(), sol.left_tail());
    std::printf("right %-11s speeds %.12g .. %.12g\n", kind(sol.right_wave()), sol.right_tail(), sol.right_head());
    return 0;
  }
  std::printf("x,rho,u,p\n");
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    const auto s = sol.sample((x - 0.5) / time);
    std::printf("%.16e,%.16e,%.16e,%.16e\n", x, s.rho, s.u, swlbm::pressure(s.rho, params));
  }
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b) {
  swlbm::RunOptions options;
  options.write_files = false;
  const auto ra = swlbm::run_case(load_case(a), options);
  const auto rb = swlbm::run_case(load_case(b), options);
  for (const auto* r : {&ra, &rb}) {
    if (r->aborted) {
      std::fprintf(stderr, "error: %s: %s\n", r->name.c_str(), r->abort_reason.c_str());
      return kExitAbort;
    }
  }
  const double diff = swlbm::l1_difference(ra.snapshots.back(), rb.snapshots.back());
  std::printf("L1(rho) difference %s (%s) vs %s (%s): %.10g\n", ra.name.c_str(), swlbm::to_string(ra.solver).c_str(),
              rb.name.c_str(), swlbm::to_string(rb.solver).c_str(), diff);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice Boltzmann and Godunov solvers for the shallow water equations"};
  app.require_subcommand(1);

  std::string source, out, solver;
  int threads = 0;
  auto* run = app.add_subcommand("run", "run a config file or a built-in case");
  run->add_option("case", source, "config file or built-in case name")->required();
  run->add_option("--out", out, "output directory");
  run->add_option("--solver", solver, "override the solver: lbm, godunov or exact");
  run->add_option("--threads", threads, "worker threads");

  std::string left, right;
  double time = 0.0;
  int cells = 100;
  bool csv = false;
  auto* exact = app.add_subcommand("exact-riemann", "exact solution of a shallow-water Riemann problem");
  exact->add_option("--left", left, "left state rho,u")->required();
  exact->add_option("--right", right, "right state rho,u")->required();
  exact->add_option("--time", time, "sampling time")->required();
  exact->add_option("--cells", cells, "cells on [0, 1] for --csv");
  exact->add_flag("--csv", csv, "print the sampled profile, diaphragm at x = 0.5");

  std::string a, b;
  auto* compare = app.add_subcommand("compare", "L1 difference between the final densities of two runs");
  compare->add_option("a", a, "first config or built-in case")->required();
  compare->add_option("b", b, "second config or built-in case")->required();

  std::string show;
  auto* cases = app.add_subcommand("cases", "built-in cases");
  cases->require_subcommand(1);
  auto* list = cases->add_subcommand("list", "list the built-in cases");
  auto* show_cmd = cases->add_subcommand("show", "print a built-in case as a config document");
  show_cmd->add_option("name", show)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*run) return cmd_run(source, out, solver, threads);
    if (*exact) return cmd_exact(left, right, time, cells, csv);
    if (*compare) return cmd_compare(a, b);
    if (*list) {
      for (const auto& c : swlbm::builtin_cases()) std::printf("%-24s %s\n", c.name.c_str(), c.description.c_str());
      return 0;
    }
    if (*show_cmd) {
      const auto cfg = swlbm::find_builtin(show);
      if (!cfg) throw swlbm::ConfigError("name", "no built-in case '" + show + "'");
      std::printf("%s\n", swlbm::dump_config(*cfg).c_str());
      return 0;
    }
  } catch (const swlbm::ConfigError& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitValidation;
  } catch (const swlbm::VacuumError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitAbort;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return 0;
}
