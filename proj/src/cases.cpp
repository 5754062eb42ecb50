#include "swlbm/cases.hpp"

#include <cmath>

#include "swlbm/errors.hpp"
#include "swlbm/riemann.hpp"

namespace swlbm {

namespace {

CaseConfig riemann_case() {
  CaseConfig c;
  c.name = "riemann1d";
  c.kind = CaseKind::Riemann1D;
  c.scheme = {8.0, 0.15, {1.8}, 0.45};
  c.mesh.n = 80;
  c.time.t_end = 0.25;
  return c;
}

CaseConfig reflection_case(int nx, int ny) {
  CaseConfig c;
  c.name = "reflection2d-" + std::to_string(nx) + "x" + std::to_string(ny);
  c.kind = CaseKind::Reflection2D;
  c.scheme = {8.0, 0.15, {1.8}, 0.45};
  c.mesh.nx = nx;
  c.mesh.ny = ny;
  // An upper bound; the run stops once the density stops changing.
  c.time.t_end = 20.0;
  c.time.steady_tol = 1e-8;
  return c;
}

CaseConfig emery_case(int nx, int ny, double t_end, const std::string& suffix) {
  CaseConfig c;
  c.name = "emery2d-" + std::to_string(nx) + "x" + std::to_string(ny) + "-t" + suffix;
  c.kind = CaseKind::Emery2D;
  c.scheme = {80.0, 0.05, {1.8}, 0.45};
  c.mesh.nx = nx;
  c.mesh.ny = ny;
  c.time.t_end = t_end;
  return c;
}

CaseConfig uniform_case(int dim) {
  CaseConfig c;
  c.name = dim == 1 ? "uniform1d" : "uniform2d";
  c.kind = CaseKind::Uniform;
  c.uniform.dim = dim;
  c.uniform.state = {1.0, 0.3, dim == 1 ? 0.0 : -0.2};
  c.mesh.n = 32;
  c.mesh.nx = 16;
  c.mesh.ny = 16;
  c.time.t_end = 0.5;
  return c;
}

std::vector<BuiltinCase> make_builtins() {
  std::vector<BuiltinCase> cases;
  cases.push_back({"riemann1d", "shock tube rho 2 | 0.5 at rest, 80 cells, t = 0.25", riemann_case()});
  for (auto [nx, ny] : {std::pair{35, 20}, std::pair{70, 40}, std::pair{140, 80}}) {
    CaseConfig c = reflection_case(nx, ny);
    cases.push_back({c.name, "stationary regular shock reflection, run to steady state", c});
  }
  for (auto [nx, ny] : {std::pair{120, 40}, std::pair{240, 80}, std::pair{480, 160}}) {
    for (auto [t, suffix] : {std::pair{0.5, "0.5"}, std::pair{4.0, "4"}}) {
      CaseConfig c = emery_case(nx, ny, t, suffix);
      cases.push_back({c.name, "forward-facing step at Froude 3", c});
    }
  }
  CaseConfig reflection = reflection_case(140, 80);
  reflection.name = "reflection2d";
  cases.push_back({"reflection2d", "alias of reflection2d-140x80", reflection});
  CaseConfig emery = emery_case(480, 160, 4.0, "4");
  emery.name = "emery2d";
  cases.push_back({"emery2d", "alias of emery2d-480x160-t4", emery});
  cases.push_back({"uniform1d", "constant state on a periodic line", uniform_case(1)});
  cases.push_back({"uniform2d", "constant state on a periodic square", uniform_case(2)});
  return cases;
}

MacroState1D conserved_1d(const Primitive2D& s) { return {s.rho, s.rho * s.u}; }
MacroState1D conserved_1d(const Primitive1D& s) { return {s.rho, s.rho * s.u}; }

SideBoundary2D side(BoundaryKind kind, const Primitive2D& state = {}) {
  return {kind, kind == BoundaryKind::Inflow ? state.conserved() : MacroState2D{}};
}

}  // namespace

const std::vector<BuiltinCase>& builtin_cases() {
  static const std::vector<BuiltinCase> cases = make_builtins();
  return cases;
}

std::optional<CaseConfig> find_builtin(const std::string& name) {
  for (const BuiltinCase& c : builtin_cases()) {
    if (c.name == name) return c.config;
  }
  return std::nullopt;
}

Problem1D make_problem_1d(const CaseConfig& cfg) {
  if (cfg.dim() != 1) throw ConfigError("case", "not a 1D case");
  Problem1D p;
  const double length = domain_extent(cfg)[0];
  p.grid = {cfg.mesh.n, length / cfg.mesh.n, cfg.scheme.lambda, 0.0};
  p.initial.resize(cfg.mesh.n);

  switch (cfg.kind) {
    case CaseKind::Riemann1D: {
      const RiemannPayload& r = cfg.riemann;
      for (int i = 0; i < cfg.mesh.n; ++i) {
        p.initial[i] = conserved_1d(p.grid.x(i) < r.diaphragm ? r.left : r.right);
      }
      p.bc.left = {r.bc, r.bc == BoundaryKind::Inflow ? conserved_1d(r.left) : MacroState1D{}};
      p.bc.right = {r.bc, r.bc == BoundaryKind::Inflow ? conserved_1d(r.right) : MacroState1D{}};
      break;
    }
    case CaseKind::Uniform:
      for (auto& s : p.initial) s = conserved_1d(cfg.uniform.state);
      break;
    case CaseKind::Custom: {
      const CustomPayload& c = cfg.custom;
      for (int i = 0; i < cfg.mesh.n; ++i) {
        const double x = p.grid.x(i);
        Primitive2D s = c.background;
        for (const Region& r : c.regions) {
          if (x >= r.box.x0 && x <= r.box.x1) s = r.state;
        }
        p.initial[i] = conserved_1d(s);
      }
      for (int k = 0; k < 2; ++k) {
        SideBoundary1D& b = k == 0 ? p.bc.left : p.bc.right;
        b.kind = c.bc[k].kind;
        if (b.kind == BoundaryKind::Inflow) b.state = conserved_1d(c.bc[k].state);
      }
      break;
    }
    default:
      break;
  }
  return p;
}

Problem2D make_problem_2d(const CaseConfig& cfg) {
  if (cfg.dim() != 2) throw ConfigError("case", "not a 2D case");
  Problem2D p;
  Grid2D& g = p.grid;
  g.nx = cfg.mesh.nx;
  g.ny = cfg.mesh.ny;
  g.dx = domain_extent(cfg)[0] / g.nx;
  g.lambda = cfg.scheme.lambda;
  p.initial.resize(g.size());

  switch (cfg.kind) {
    case CaseKind::Reflection2D: {
      // The incident shock only; the reflected one develops from the wall.
      const ReflectionStates& st = cfg.reflection.states;
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          p.initial[g.index(i, j)] = (g.x(i) + g.y(j) < 1.0 ? st.left : st.top).conserved();
        }
      }
      p.bc.left = side(BoundaryKind::Inflow, st.left);
      p.bc.top = side(BoundaryKind::Inflow, st.top);
      p.bc.bottom = side(BoundaryKind::Wall);
      p.bc.right = side(BoundaryKind::Outflow);
      break;
    }
    case CaseKind::Emery2D: {
      const EmeryPayload& e = cfg.emery;
      g.solid.assign(g.size(), 0);
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          const std::size_t k = g.index(i, j);
          if (g.x(i) >= e.step_x && g.y(j) < e.step_height) {
            g.solid[k] = 1;
          } else {
            p.initial[k] = e.inflow.conserved();
          }
        }
      }
      p.bc.left = side(BoundaryKind::Inflow, e.inflow);
      p.bc.right = side(BoundaryKind::Outflow);
      p.bc.bottom = side(BoundaryKind::Wall);
      p.bc.top = side(BoundaryKind::Wall);
      break;
    }
    case CaseKind::Uniform:
      for (auto& s : p.initial) s = cfg.uniform.state.conserved();
      break;
    case CaseKind::Custom: {
      const CustomPayload& c = cfg.custom;
      if (!c.obstacles.empty()) g.solid.assign(g.size(), 0);
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          const double x = g.x(i), y = g.y(j);
          const std::size_t k = g.index(i, j);
          bool solid = false;
          for (const Box& b : c.obstacles) solid = solid || b.contains(x, y);
          if (solid) {
            g.solid[k] = 1;
            continue;
          }
          Primitive2D s = c.background;
          for (const Region& r : c.regions) {
            if (r.box.contains(x, y)) s = r.state;
          }
          p.initial[k] = s.conserved();
        }
      }
      p.bc.left = side(c.bc[0].kind, c.bc[0].state);
      p.bc.right = side(c.bc[1].kind, c.bc[1].state);
      p.bc.bottom = side(c.bc[2].kind, c.bc[2].state);
      p.bc.top = side(c.bc[3].kind, c.bc[3].state);
      break;
    }
    default:
      break;
  }
  return p;
}

std::optional<DensitySampler> exact_density(const CaseConfig& cfg, double time) {
  switch (cfg.kind) {
    case CaseKind::Riemann1D: {
      if (cfg.riemann.bc == BoundaryKind::Periodic || time <= 0.0) return std::nullopt;
      const RiemannSolution sol = exact_riemann(cfg.riemann.left, cfg.riemann.right, cfg.phys);
      const double x0 = cfg.riemann.diaphragm;
      return DensitySampler([sol, x0, time](double x, double) { return sol.sample((x - x0) / time).rho; });
    }
    case CaseKind::Reflection2D: {
      const ReflectionStates st = cfg.reflection.states;
      return DensitySampler([st](double x, double y) { return reflection_exact(x, y, st).rho; });
    }
    case CaseKind::Uniform: {
      const double rho = cfg.uniform.state.rho;
      return DensitySampler([rho](double, double) { return rho; });
    }
    default:
      return std::nullopt;
  }
}

FieldSnapshot to_snapshot(const Grid1D& grid, const std::vector<MacroState1D>& states, long step, double time) {
  FieldSnapshot f;
  f.dim = 1;
  f.nx = grid.n_cells;
  f.ny = 1;
  f.dx = grid.dx;
  f.x0 = grid.x0;
  f.step = step;
  f.time = time;
  f.rho.resize(states.size());
  f.u.resize(states.size());
  f.v.assign(states.size(), 0.0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    f.rho[k] = states[k].rho;
    f.u[k] = states[k].q / states[k].rho;
  }
  return f;
}

FieldSnapshot to_snapshot(const Grid2D& grid, const std::vector<MacroState2D>& states, long step, double time) {
  FieldSnapshot f;
  f.dim = 2;
  f.nx = grid.nx;
  f.ny = grid.ny;
  f.dx = grid.dx;
  f.x0 = grid.x0;
  f.y0 = grid.y0;
  f.step = step;
  f.time = time;
  f.solid = grid.solid;
  f.rho.assign(states.size(), 0.0);
  f.u.assign(states.size(), 0.0);
  f.v.assign(states.size(), 0.0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (f.is_solid(k) || states[k].rho <= 0.0) continue;
    f.rho[k] = states[k].rho;
    f.u[k] = states[k].qx / states[k].rho;
    f.v[k] = states[k].qy / states[k].rho;
  }
  return f;
}

}  // namespace swlbm
