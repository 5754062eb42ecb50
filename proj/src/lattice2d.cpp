#include "swlbm/lattice2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swlbm/errors.hpp"
#include "swlbm/parallel.hpp"

namespace swlbm {

namespace {

// D2Q5 moving velocities k = 1..4: +x, +y, -x, -y.
constexpr std::array<int, 5> kEx{0, 1, 0, -1, 0};
constexpr std::array<int, 5> kEy{0, 0, 1, 0, -1};
constexpr std::array<int, 5> kOpposite{0, 3, 4, 1, 2};

struct MovingPopulations {
  double f;
  double gx;
  double gy;
};

MovingPopulations take(const Cell2D& c, int k) { return {c.f[k], c.gx[k - 1], c.gy[k - 1]}; }

// Incoming population k at a cell whose upstream face is a wall.
MovingPopulations mirror(const Cell2D& c, int k) {
  const int o = kOpposite[k];
  const bool x_normal = kEx[k] != 0;
  return {c.f[o], x_normal ? -c.gx[o - 1] : c.gx[o - 1], x_normal ? c.gy[o - 1] : -c.gy[o - 1]};
}

MovingPopulations take(const Equilibrium2D& eq, int k) { return {eq.f[k], eq.gx[k - 1], eq.gy[k - 1]}; }

}  // namespace

void Grid2D::validate() const {
  if (nx < 1 || ny < 1) throw DomainError("2D grid needs positive nx, ny");
  if (!(dx > 0.0)) throw DomainError("dx must be positive");
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (!solid.empty() && solid.size() != size()) throw DomainError("obstacle mask size does not match the grid");
}

Moments2D moments_from_populations(const Cell2D& c, double lambda) {
  Moments2D m;
  const auto& f = c.f;
  m.rho = f[0] + f[1] + f[2] + f[3] + f[4];
  m.Jx_rho = lambda * (f[1] - f[3]);
  m.Jy_rho = lambda * (f[2] - f[4]);
  m.eps_rho = f[1] + f[2] + f[3] + f[4] - 4.0 * f[0];
  m.XX_rho = f[1] - f[2] + f[3] - f[4];
  const auto& gx = c.gx;
  m.qx = gx[0] + gx[1] + gx[2] + gx[3];
  m.fxx = lambda * (gx[0] - gx[2]);
  m.fxy = lambda * (gx[1] - gx[3]);
  m.XX_u = gx[0] - gx[1] + gx[2] - gx[3];
  const auto& gy = c.gy;
  m.qy = gy[0] + gy[1] + gy[2] + gy[3];
  m.fyx = lambda * (gy[0] - gy[2]);
  m.fyy = lambda * (gy[1] - gy[3]);
  m.XX_v = gy[0] - gy[1] + gy[2] - gy[3];
  return m;
}

namespace {

// Inverse of (sum, lambda (g1 - g3), lambda (g2 - g4), g1 - g2 + g3 - g4).
std::array<double, 4> invert_q4(double sum, double flux1, double flux2, double xx, double lambda) {
  const double s13 = 0.5 * (sum + xx);
  const double s24 = 0.5 * (sum - xx);
  return {0.5 * (s13 + flux1 / lambda), 0.5 * (s24 + flux2 / lambda), 0.5 * (s13 - flux1 / lambda),
          0.5 * (s24 - flux2 / lambda)};
}

}  // namespace

Cell2D populations_from_moments(const Moments2D& m, double lambda) {
  Cell2D c;
  c.f[0] = (m.rho - m.eps_rho) / 5.0;
  const auto moving = invert_q4(m.rho - c.f[0], m.Jx_rho, m.Jy_rho, m.XX_rho, lambda);
  std::copy(moving.begin(), moving.end(), c.f.begin() + 1);
  c.gx = invert_q4(m.qx, m.fxx, m.fxy, m.XX_u, lambda);
  c.gy = invert_q4(m.qy, m.fyx, m.fyy, m.XX_v, lambda);
  return c;
}

Moments2D equilibrium_moments(const MacroState2D& state, const KineticParams& kp) {
  const PhysParams& phys = kp.phys();
  const double theta = entropy_vars(state, phys).theta;
  const double p = pressure(state.rho, phys);
  const double u = state.u();
  const double v = state.v();
  Moments2D m;
  m.rho = state.rho;
  m.Jx_rho = state.qx;
  m.Jy_rho = state.qy;
  m.eps_rho = state.rho - 5.0 * kp.a() * phys.K() * theta;
  m.XX_rho = 0.0;
  m.qx = state.qx;
  m.fxx = state.qx * u + p;
  m.fxy = state.qx * v;
  m.XX_u = 0.0;
  m.qy = state.qy;
  m.fyx = state.qy * u;
  m.fyy = state.qy * v + p;
  m.XX_v = 0.0;
  return m;
}

Cell2D collide(const Cell2D& cell, const KineticParams& kp, const Rates2D& s) {
  const double lam = kp.lambda();
  Moments2D m = moments_from_populations(cell, lam);
  if (!(m.rho > 0.0) || !std::isfinite(m.rho) || !std::isfinite(m.qx) || !std::isfinite(m.qy)) {
    throw DomainError("non-positive or non-finite density in collision");
  }
  const Moments2D eq = equilibrium_moments({m.rho, m.qx, m.qy}, kp);
  auto relax = [](double& value, double target, double rate) { value += rate * (target - value); };
  relax(m.Jx_rho, eq.Jx_rho, s[0]);
  relax(m.Jy_rho, eq.Jy_rho, s[1]);
  relax(m.eps_rho, eq.eps_rho, s[2]);
  relax(m.XX_rho, eq.XX_rho, s[3]);
  relax(m.fxx, eq.fxx, s[4]);
  relax(m.fxy, eq.fxy, s[5]);
  relax(m.XX_u, eq.XX_u, s[6]);
  relax(m.fyx, eq.fyx, s[7]);
  relax(m.fyy, eq.fyy, s[8]);
  relax(m.XX_v, eq.XX_v, s[9]);
  return populations_from_moments(m, lam);
}

Field2D equilibrium_field(const Grid2D& grid, std::span<const MacroState2D> states, const KineticParams& kp) {
  if (states.size() != grid.size()) throw std::invalid_argument("initial state size does not match the grid");
  Field2D field(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (!grid.solid.empty() && grid.solid[c]) continue;
    const Equilibrium2D eq = equilibrium_2d(states[c], kp);
    field.cells[c] = {eq.f, eq.gx, eq.gy};
  }
  field.next = field.cells;
  return field;
}

void collide_field(Field2D& field, const Grid2D& grid, const KineticParams& kp, const Rates2D& s, long step,
                   int threads) {
  FirstFailure failure;
  parallel_for(field.size(), threads, [&](std::size_t c) {
    if (!grid.solid.empty() && grid.solid[c]) return;
    const Cell2D& cell = field.cells[c];
    const double rho = cell.rho();
    if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(cell.qx()) || !std::isfinite(cell.qy())) {
      failure.report(c);
      return;
    }
    field.cells[c] = collide(cell, kp, s);
  });
  if (failure.failed()) {
    const std::size_t c = failure.index();
    std::ostringstream msg;
    msg << "density blow-up at cell (" << c % grid.nx << ", " << c / grid.nx << "), step " << step
        << " (rho = " << field.cells[c].rho() << ")";
    throw BlowUpError(c, step, msg.str());
  }
}

BoundaryMassFlux stream(Field2D& field, const Grid2D& grid, const Boundaries2D& bc, const KineticParams& kp,
                        int threads) {
  const std::vector<Cell2D>& post = field.cells;
  std::vector<Cell2D>& out = field.next;
  const int nx = grid.nx;
  const int ny = grid.ny;

  auto side_equilibrium = [&](const SideBoundary2D& side) {
    return side.kind == BoundaryKind::Inflow ? equilibrium_2d(side.state, kp) : Equilibrium2D{};
  };
  const std::array<Equilibrium2D, 4> side_eq{side_equilibrium(bc.left), side_equilibrium(bc.right),
                                             side_equilibrium(bc.bottom), side_equilibrium(bc.top)};
  const std::array<const SideBoundary2D*, 4> sides{&bc.left, &bc.right, &bc.bottom, &bc.top};

  // Incoming population k at fluid cell (i, j). `from_ghost` is set when it
  // enters through an open domain side.
  auto incoming = [&](int i, int j, int k, bool* from_ghost) -> MovingPopulations {
    const Cell2D& here = post[grid.index(i, j)];
    int si = i - kEx[k];
    int sj = j - kEy[k];
    if (si >= 0 && si < nx && sj >= 0 && sj < ny) {
      return grid.is_solid(si, sj) ? mirror(here, k) : take(post[grid.index(si, sj)], k);
    }
    const int side = si < 0 ? 0 : si >= nx ? 1 : sj < 0 ? 2 : 3;
    switch (sides[side]->kind) {
      case BoundaryKind::Periodic:
        si = (si + nx) % nx;
        sj = (sj + ny) % ny;
        return grid.is_solid(si, sj) ? mirror(here, k) : take(post[grid.index(si, sj)], k);
      case BoundaryKind::Wall:
        return mirror(here, k);
      case BoundaryKind::Inflow:
        if (from_ghost) *from_ghost = true;
        return take(side_eq[side], k);
      case BoundaryKind::Outflow:
        if (from_ghost) *from_ghost = true;
        return take(here, k);
    }
    return {};
  };

  parallel_for(grid.size(), threads, [&](std::size_t c) {
    const int i = static_cast<int>(c % nx);
    const int j = static_cast<int>(c / nx);
    if (grid.is_solid(i, j)) {
      out[c] = post[c];
      return;
    }
    Cell2D cell;
    cell.f[0] = post[c].f[0];
    for (int k = 1; k <= 4; ++k) {
      const MovingPopulations m = incoming(i, j, k, nullptr);
      cell.f[k] = m.f;
      cell.gx[k - 1] = m.gx;
      cell.gy[k - 1] = m.gy;
    }
    out[c] = cell;
  });

  // Open-side mass balance, accumulated in a fixed order.
  BoundaryMassFlux flux;
  auto edge = [&](int i, int j, int k_in) {
    if (grid.is_solid(i, j)) return;
    bool open = false;
    const MovingPopulations m = incoming(i, j, k_in, &open);
    if (!open) return;
    flux.in += m.f;
    flux.out += post[grid.index(i, j)].f[kOpposite[k_in]];
  };
  for (int j = 0; j < ny; ++j) {
    edge(0, j, 1);
    edge(nx - 1, j, 3);
  }
  for (int i = 0; i < nx; ++i) {
    edge(i, 0, 2);
    edge(i, ny - 1, 4);
  }

  std::swap(field.cells, field.next);
  return flux;
}

std::vector<MacroState2D> macro_fields(const Field2D& field, const Grid2D& grid) {
  std::vector<MacroState2D> out(field.size());
  for (std::size_t c = 0; c < field.size(); ++c) {
    if (!grid.solid.empty() && grid.solid[c]) continue;
    out[c] = field.cells[c].macro();
  }
  return out;
}

namespace {

void record(const Field2D& field, const Lbm2DSetup& setup, Diagnostics2D& diag) {
  const Grid2D& grid = setup.grid;
  double mass = 0.0, mx = 0.0, my = 0.0;
  double min_rho = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  for (std::size_t c = 0; c < field.size(); ++c) {
    if (!grid.solid.empty() && grid.solid[c]) continue;
    const Cell2D& cell = field.cells[c];
    const double rho = cell.rho();
    mass += rho;
    mx += cell.qx();
    my += cell.qy();
    min_rho = std::min(min_rho, rho);
    if (rho > 0.0) {
      const double speed = std::hypot(cell.qx(), cell.qy()) / rho + sound_speed(rho, setup.kp.phys());
      max_ratio = std::max(max_ratio, speed / setup.kp.lambda());
    }
  }
  const double area = grid.dx * grid.dx;
  diag.mass.push_back(mass * area);
  diag.momentum_x.push_back(mx * area);
  diag.momentum_y.push_back(my * area);
  diag.min_rho = diag.mass.size() == 1 ? min_rho : std::min(diag.min_rho, min_rho);
  if (max_ratio > 0.9 && diag.max_signal_ratio <= 0.9) {
    std::ostringstream msg;
    msg << "sub-characteristic margin violated: max(|u|+c) = " << max_ratio << " lambda";
    diag.warnings.push_back(msg.str());
  }
  diag.max_signal_ratio = std::max(diag.max_signal_ratio, max_ratio);
}

}  // namespace

Trajectory2D run_2d(const Lbm2DSetup& setup) {
  const Grid2D& grid = setup.grid;
  grid.validate();
  const auto periodic = [](const SideBoundary2D& s) { return s.kind == BoundaryKind::Periodic; };
  if (periodic(setup.bc.left) != periodic(setup.bc.right) || periodic(setup.bc.bottom) != periodic(setup.bc.top)) {
    throw std::invalid_argument("periodic boundaries must come in opposite pairs");
  }
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (grid.solid.empty() || !grid.solid[c]) {
      if (!(setup.initial.at(c).rho > 0.0)) throw BlowUpError(c, 0, "non-positive initial density");
    }
  }

  Trajectory2D traj;
  Diagnostics2D& diag = traj.diagnostics;
  Field2D field = equilibrium_field(grid, setup.initial, setup.kp);
  const double dt = grid.dt();
  const double area = grid.dx * grid.dx;
  traj.snapshots.push_back({0, 0.0, macro_fields(field, grid)});
  record(field, setup, diag);
  diag.boundary_flux.push_back({});

  std::size_t fluid_cells = 0;
  for (std::size_t c = 0; c < grid.size(); ++c) fluid_cells += grid.solid.empty() || !grid.solid[c];

  std::vector<double> previous_rho;
  for (long step = 1; step <= setup.n_steps; ++step) {
    if (setup.steady_tol > 0.0) {
      previous_rho.resize(field.size());
      for (std::size_t c = 0; c < field.size(); ++c) previous_rho[c] = field.cells[c].rho();
    }
    collide_field(field, grid, setup.kp, setup.s, step, setup.threads);
    BoundaryMassFlux flux = stream(field, grid, setup.bc, setup.kp, setup.threads);
    diag.boundary_flux.push_back({flux.in * area, flux.out * area});
    record(field, setup, diag);
    diag.steps = step;

    bool stop = false;
    if (setup.steady_tol > 0.0) {
      double change = 0.0;
      for (std::size_t c = 0; c < field.size(); ++c) {
        if (!grid.solid.empty() && grid.solid[c]) continue;
        change += std::abs(field.cells[c].rho() - previous_rho[c]);
      }
      diag.last_change = change / static_cast<double>(fluid_cells);
      if (diag.last_change < setup.steady_tol) {
        diag.reached_steady = true;
        stop = true;
      }
    }
    const bool cadence = setup.output_every > 0 && step % setup.output_every == 0;
    if (cadence || step == setup.n_steps || stop) {
      traj.snapshots.push_back({step, step * dt, macro_fields(field, grid)});
    }
    if (stop) break;
  }
  return traj;
}

}  // namespace swlbm
