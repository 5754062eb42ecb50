#include "swlbm/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <limits>
#include <numbers>

#include "swlbm/cases.hpp"
#include "swlbm/errors.hpp"
#include "swlbm/godunov.hpp"
#include "swlbm/output.hpp"
#include "swlbm/reflection.hpp"
#include "swlbm/riemann.hpp"

namespace swlbm {

namespace {

long step_count(double t_end, double dt) { return std::max(1L, std::lround(t_end / dt)); }

Rates1D rates_1d(const CaseConfig& cfg) {
  const auto s = expand_rates(cfg.scheme.s, 1);
  return {s[0], s[1], s[2]};
}

Rates2D rates_2d(const CaseConfig& cfg) {
  const auto s = expand_rates(cfg.scheme.s, 2);
  Rates2D r{};
  std::copy(s.begin(), s.end(), r.begin());
  return r;
}

double min_density(const std::vector<FieldSnapshot>& snapshots) {
  double m = std::numeric_limits<double>::infinity();
  for (const FieldSnapshot& f : snapshots) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (!f.is_solid(k)) m = std::min(m, f.rho[k]);
    }
  }
  return m;
}

void record_totals(RunReport& report, const std::vector<double>& mass, const std::vector<double>& momentum) {
  if (mass.empty()) return;
  report.mass_change = mass.back() - mass.front();
  report.mass_drift = report.mass_change / mass.front();
  if (!momentum.empty()) report.momentum_change = momentum.back() - momentum.front();
}

void run_lbm_1d(const CaseConfig& cfg, RunReport& report) {
  const Problem1D p = make_problem_1d(cfg);
  Lbm1DSetup setup;
  setup.grid = p.grid;
  setup.kp = KineticParams(cfg.scheme.a, cfg.scheme.lambda, cfg.phys);
  setup.s = rates_1d(cfg);
  setup.bc = p.bc;
  setup.initial = p.initial;
  setup.n_steps = step_count(cfg.time.t_end, p.grid.dt());
  setup.output_every = cfg.time.output_every;
  setup.threads = cfg.threads;
  const Trajectory1D traj = run_1d(setup);

  for (const Snapshot1D& s : traj.snapshots) report.snapshots.push_back(to_snapshot(p.grid, s.state, s.step, s.time));
  report.steps = setup.n_steps;
  record_totals(report, traj.diagnostics.mass, traj.diagnostics.momentum);
  report.min_rho = traj.diagnostics.min_rho;
  report.warnings = traj.diagnostics.warnings;
}

void run_lbm_2d(const CaseConfig& cfg, RunReport& report) {
  const Problem2D p = make_problem_2d(cfg);
  Lbm2DSetup setup;
  setup.grid = p.grid;
  setup.kp = KineticParams(cfg.scheme.a, cfg.scheme.lambda, cfg.phys);
  setup.s = rates_2d(cfg);
  setup.bc = p.bc;
  setup.initial = p.initial;
  setup.n_steps = step_count(cfg.time.t_end, p.grid.dt());
  setup.output_every = cfg.time.output_every;
  setup.steady_tol = cfg.time.steady_tol;
  setup.threads = cfg.threads;
  const Trajectory2D traj = run_2d(setup);

  for (const Snapshot2D& s : traj.snapshots) report.snapshots.push_back(to_snapshot(p.grid, s.state, s.step, s.time));
  const Diagnostics2D& d = traj.diagnostics;
  report.steps = d.steps;
  report.reached_steady = d.reached_steady;
  report.last_change = d.last_change;
  record_totals(report, d.mass, d.momentum_x);
  double net = 0.0;
  for (std::size_t k = 1; k < d.boundary_flux.size(); ++k) net += d.boundary_flux[k].in - d.boundary_flux[k].out;
  report.mass_balance = report.mass_change - net;
  report.min_rho = d.min_rho;
  report.warnings = d.warnings;
}

void run_godunov_case_1d(const CaseConfig& cfg, RunReport& report) {
  const Problem1D p = make_problem_1d(cfg);
  const GodunovRun1D run = run_godunov_1d(p.initial, p.grid.dx, p.bc, cfg.phys, cfg.scheme.cfl, cfg.time.t_end,
                                          cfg.time.output_every, cfg.threads);
  for (const Snapshot1D& s : run.snapshots) report.snapshots.push_back(to_snapshot(p.grid, s.state, s.step, s.time));
  report.steps = run.steps;
  record_totals(report, run.mass, run.momentum);
  double net = 0.0;
  for (const BoundaryInflow1D& in : run.inflow) net += in.mass;
  report.mass_balance = report.mass_change - net;
  report.min_rho = min_density(report.snapshots);
}

void run_godunov_case_2d(const CaseConfig& cfg, RunReport& report) {
  const Problem2D p = make_problem_2d(cfg);
  const GodunovRun2D run = run_godunov_2d(p.initial, p.grid, p.bc, cfg.phys, cfg.scheme.cfl, cfg.time.t_end,
                                          cfg.time.output_every, cfg.time.steady_tol, cfg.threads);
  for (const Snapshot2D& s : run.snapshots) report.snapshots.push_back(to_snapshot(p.grid, s.state, s.step, s.time));
  report.steps = run.steps;
  report.reached_steady = run.reached_steady;
  report.last_change = run.last_change;
  record_totals(report, run.mass, {});
  report.min_rho = min_density(report.snapshots);
}

void run_exact(const CaseConfig& cfg, RunReport& report) {
  const double t = cfg.time.t_end;
  if (cfg.dim() == 1) {
    const Problem1D p = make_problem_1d(cfg);
    std::vector<MacroState1D> states(p.initial.size());
    if (cfg.kind == CaseKind::Riemann1D) {
      const RiemannSolution sol = exact_riemann(cfg.riemann.left, cfg.riemann.right, cfg.phys);
      for (int i = 0; i < p.grid.n_cells; ++i) {
        const Primitive1D s = sol.sample((p.grid.x(i) - cfg.riemann.diaphragm) / t);
        states[i] = {s.rho, s.rho * s.u};
      }
    } else {
      states = p.initial;
    }
    report.snapshots.push_back(to_snapshot(p.grid, states, 0, t));
  } else {
    const Problem2D p = make_problem_2d(cfg);
    std::vector<MacroState2D> states = p.initial;
    if (cfg.kind == CaseKind::Reflection2D) {
      for (int j = 0; j < p.grid.ny; ++j) {
        for (int i = 0; i < p.grid.nx; ++i) {
          states[p.grid.index(i, j)] = reflection_exact(p.grid.x(i), p.grid.y(j), cfg.reflection.states).conserved();
        }
      }
    }
    report.snapshots.push_back(to_snapshot(p.grid, states, 0, t));
  }
  report.final_time = t;
  report.min_rho = min_density(report.snapshots);
}

template <class F>
void metric(RunReport& report, const std::string& name, F&& compute) {
  try {
    report.metrics[name] = compute();
  } catch (const MetricUnavailable& e) {
    report.unavailable[name] = e.what();
  }
}

void riemann_metrics(const CaseConfig& cfg, const FieldSnapshot& field, RunReport& report) {
  if (field.time <= 0.0 || cfg.riemann.bc == BoundaryKind::Periodic) return;
  const RiemannSolution sol = exact_riemann(cfg.riemann.left, cfg.riemann.right, cfg.phys);
  const double x0 = cfg.riemann.diaphragm;
  const double t = field.time;
  const double contact = x0 + sol.u_star() * t;
  report.metrics["rho_star_exact"] = sol.rho_star();

  std::optional<double> shock;
  if (sol.right_wave() == WaveKind::Shock) {
    report.metrics["shock_position_exact"] = x0 + sol.right_head() * t;
    metric(report, "shock_position", [&] { return shock_position_1d(field, contact); });
    if (report.metrics.count("shock_position")) shock = report.metrics["shock_position"];
  }
  std::optional<double> tail;
  if (sol.left_wave() == WaveKind::Rarefaction) {
    report.metrics["rarefaction_head_exact"] = x0 + sol.left_head() * t;
    report.metrics["rarefaction_tail_exact"] = x0 + sol.left_tail() * t;
    try {
      const RarefactionEdges edges = rarefaction_edges(field, sol, x0);
      report.metrics["rarefaction_head"] = edges.head;
      report.metrics["rarefaction_tail"] = edges.tail;
      tail = edges.tail;
    } catch (const MetricUnavailable& e) {
      report.unavailable["rarefaction_head"] = e.what();
    }
  }
  if (shock && tail) {
    try {
      // Each numerical wave owns a transition layer of two cells on its plateau side.
      constexpr double kLayer = 2.0;
      const PlateauStats stats =
          plateau(field, *tail + kLayer * field.dx, *shock - kLayer * field.dx, sol.rho_star());
      report.metrics["plateau_mean"] = stats.mean;
      report.metrics["plateau_max_deviation"] = stats.max_rel_deviation;
    } catch (const MetricUnavailable& e) {
      report.unavailable["plateau_mean"] = e.what();
    }
  }
}

void evaluate_metrics(const CaseConfig& cfg, RunReport& report) {
  const FieldSnapshot& field = report.snapshots.back();
  if (const auto exact = exact_density(cfg, field.time)) {
    report.metrics["l1_rho"] = l1_error(field, *exact);
  }
  switch (cfg.kind) {
    case CaseKind::Riemann1D:
      riemann_metrics(cfg, field, report);
      break;
    case CaseKind::Reflection2D:
      report.metrics["reflected_angle_exact_deg"] =
          std::atan(cfg.reflection.states.reflected_slope()) * 180.0 / std::numbers::pi;
      metric(report, "reflected_angle_deg", [&] { return reflected_shock_angle(field); });
      break;
    case CaseKind::Emery2D:
      try {
        const BowShock bow = bow_shock(field, cfg.emery.step_x);
        report.metrics["bow_shock_x"] = bow.x;
        report.metrics["bow_shock_peak_ratio"] = bow.peak_ratio;
      } catch (const MetricUnavailable& e) {
        report.unavailable["bow_shock_x"] = e.what();
      }
      break;
    default:
      break;
  }
}

void write_fields(const CaseConfig& cfg, const std::filesystem::path& dir, RunReport& report) {
  const std::string base = cfg.name + "_" + to_string(cfg.solver);
  const bool vtk = cfg.output.format == OutputFormat::Vtk;
  const char* ext = vtk ? ".vtk" : ".csv";
  for (std::size_t k = 0; k < report.snapshots.size(); ++k) {
    const FieldSnapshot& f = report.snapshots[k];
    const bool last = k + 1 == report.snapshots.size();
    if (!last && cfg.time.output_every == 0) continue;
    std::string file = base;
    if (!last) {
      char suffix[32];
      std::snprintf(suffix, sizeof suffix, "_%08ld", f.step);
      file += suffix;
    }
    const std::filesystem::path path = dir / (file + ext);
    if (vtk) {
      write_vtk(f, cfg.phys, path);
    } else {
      write_csv(f, cfg.phys, path);
    }
    report.manifest.push_back(path);
  }
}

}  // namespace

std::filesystem::path resolve_output_dir(const CaseConfig& config, const RunOptions& options) {
  if (options.output_dir) return *options.output_dir;
  if (const char* env = std::getenv("SWLBM_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return config.output.directory;
}

RunReport run_case(const CaseConfig& cfg, const RunOptions& options) {
  RunReport report;
  report.name = cfg.name;
  report.kind = cfg.kind;
  report.solver = cfg.solver;

  const auto start = std::chrono::steady_clock::now();
  try {
    switch (cfg.solver) {
      case SolverKind::Lbm:
        cfg.dim() == 1 ? run_lbm_1d(cfg, report) : run_lbm_2d(cfg, report);
        break;
      case SolverKind::Godunov:
        cfg.dim() == 1 ? run_godunov_case_1d(cfg, report) : run_godunov_case_2d(cfg, report);
        break;
      case SolverKind::Exact:
        run_exact(cfg, report);
        break;
    }
  } catch (const BlowUpError& e) {
    report.aborted = true;
    report.abort_reason = std::string(to_string(cfg.solver)) + " solver aborted: " + e.what();
  } catch (const VacuumError& e) {
    report.aborted = true;
    report.abort_reason = std::string("exact Riemann solver: ") + e.what();
  } catch (const ConvergenceError& e) {
    report.aborted = true;
    report.abort_reason = e.what();
  } catch (const DomainError& e) {
    report.aborted = true;
    report.abort_reason = std::string(to_string(cfg.solver)) + " solver left the physical domain: " + e.what();
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.aborted) return report;

  report.final_time = report.snapshots.back().time;
  if (cfg.time.steady_tol > 0.0 && cfg.solver != SolverKind::Exact && !report.reached_steady) {
    report.warnings.push_back("steady state not reached by t = " + std::to_string(report.final_time) +
                              " (last change " + std::to_string(report.last_change) + ")");
  }
  evaluate_metrics(cfg, report);
  if (options.write_files) write_fields(cfg, resolve_output_dir(cfg, options), report);
  return report;
}

std::string report_json(const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["name"] = report.name;
  doc["case"] = to_string(report.kind);
  doc["solver"] = to_string(report.solver);
  doc["aborted"] = report.aborted;
  if (report.aborted) doc["abort_reason"] = report.abort_reason;
  doc["wall_seconds"] = report.wall_seconds;
  doc["steps"] = report.steps;
  doc["final_time"] = report.final_time;
  doc["reached_steady"] = report.reached_steady;
  doc["last_change"] = report.last_change;
  doc["mass_change"] = report.mass_change;
  doc["mass_drift"] = report.mass_drift;
  doc["momentum_change"] = report.momentum_change;
  if (report.mass_balance) doc["mass_balance"] = *report.mass_balance;
  doc["min_rho"] = report.min_rho;
  doc["metrics"] = report.metrics;
  doc["unavailable"] = report.unavailable;
  doc["manifest"] = nlohmann::json::array();
  for (const auto& p : report.manifest) doc["manifest"].push_back(p.string());
  doc["warnings"] = report.warnings;
  return doc.dump(2);
}

}  // namespace swlbm
