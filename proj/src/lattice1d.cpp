#include "swlbm/lattice1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swlbm/errors.hpp"
#include "swlbm/parallel.hpp"

namespace swlbm {

void Grid1D::validate() const {
  if (n_cells < 4) throw DomainError("1D grid needs at least 4 cells");
  if (!(dx > 0.0)) throw DomainError("dx must be positive");
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
}

Moments1D moments_from_populations(const Cell1D& c, double lambda) {
  Moments1D m;
  m.rho = c.f[0] + c.f[1] + c.f[2];
  m.J_rho = lambda * (c.f[1] - c.f[2]);
  m.eps_rho = lambda * lambda * (c.f[1] + c.f[2] - 2.0 * c.f[0]);
  m.q = c.g[0] + c.g[1];
  m.J_q = lambda * (c.g[0] - c.g[1]);
  return m;
}

Cell1D populations_from_moments(const Moments1D& m, double lambda) {
  Cell1D c;
  c.f[0] = (m.rho - m.eps_rho / (lambda * lambda)) / 3.0;
  const double moving = m.rho - c.f[0];
  const double diff = m.J_rho / lambda;
  c.f[1] = 0.5 * (moving + diff);
  c.f[2] = 0.5 * (moving - diff);
  const double gdiff = m.J_q / lambda;
  c.g[0] = 0.5 * (m.q + gdiff);
  c.g[1] = 0.5 * (m.q - gdiff);
  return c;
}

Moments1D equilibrium_moments(const MacroState1D& state, const KineticParams& kp) {
  const PhysParams& phys = kp.phys();
  const double lam = kp.lambda();
  const double theta = entropy_vars(state, phys).theta;
  Moments1D m;
  m.rho = state.rho;
  m.J_rho = state.q;
  m.eps_rho = lam * lam * (state.rho - 3.0 * kp.a() * phys.K() * theta);
  m.q = state.q;
  m.J_q = state.q * state.q / state.rho + pressure(state.rho, phys);
  return m;
}

Cell1D collide(const Cell1D& cell, const KineticParams& kp, const Rates1D& s) {
  const double lam = kp.lambda();
  Moments1D m = moments_from_populations(cell, lam);
  if (!(m.rho > 0.0) || !std::isfinite(m.rho) || !std::isfinite(m.q)) {
    throw DomainError("non-positive or non-finite density in collision");
  }
  const Moments1D eq = equilibrium_moments({m.rho, m.q}, kp);
  m.J_rho += s[0] * (eq.J_rho - m.J_rho);
  m.eps_rho += s[1] * (eq.eps_rho - m.eps_rho);
  m.J_q += s[2] * (eq.J_q - m.J_q);
  return populations_from_moments(m, lam);
}

Field1D equilibrium_field(std::span<const MacroState1D> states, const KineticParams& kp) {
  Field1D field(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Equilibrium1D eq = equilibrium_1d(states[i], kp);
    field.cells[i] = {eq.f, eq.g};
  }
  field.next = field.cells;
  return field;
}

void collide_field(Field1D& field, const KineticParams& kp, const Rates1D& s, long step, int threads) {
  FirstFailure failure;
  parallel_for(field.size(), threads, [&](std::size_t i) {
    const double rho = field.cells[i].rho();
    if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(field.cells[i].q())) {
      failure.report(i);
      return;
    }
    field.cells[i] = collide(field.cells[i], kp, s);
  });
  if (failure.failed()) {
    const std::size_t cell = failure.index();
    std::ostringstream msg;
    msg << "density blow-up at cell " << cell << ", step " << step << " (rho = " << field.cells[cell].rho() << ")";
    throw BlowUpError(cell, step, msg.str());
  }
}

void stream(Field1D& field, const Boundaries1D& bc, const KineticParams& kp, int threads) {
  const std::size_t n = field.size();
  const std::vector<Cell1D>& post = field.cells;
  std::vector<Cell1D>& out = field.next;

  auto ghost_equilibrium = [&](const SideBoundary1D& side) {
    return side.kind == BoundaryKind::Inflow ? equilibrium_1d(side.state, kp) : Equilibrium1D{};
  };
  const Equilibrium1D left_eq = ghost_equilibrium(bc.left);
  const Equilibrium1D right_eq = ghost_equilibrium(bc.right);

  parallel_for(n, threads, [&](std::size_t i) {
    Cell1D c;
    c.f[kRest] = post[i].f[kRest];

    // Right-moving populations arrive from the left neighbour.
    if (i > 0) {
      c.f[kPlus] = post[i - 1].f[kPlus];
      c.g[0] = post[i - 1].g[0];
    } else {
      switch (bc.left.kind) {
        case BoundaryKind::Periodic:
          c.f[kPlus] = post[n - 1].f[kPlus];
          c.g[0] = post[n - 1].g[0];
          break;
        case BoundaryKind::Inflow:
          c.f[kPlus] = left_eq.f[kPlus];
          c.g[0] = left_eq.g[0];
          break;
        case BoundaryKind::Outflow:
          c.f[kPlus] = post[i].f[kPlus];
          c.g[0] = post[i].g[0];
          break;
        case BoundaryKind::Wall:
          c.f[kPlus] = post[i].f[kMinus];
          c.g[0] = -post[i].g[1];
          break;
      }
    }

    // Left-moving populations arrive from the right neighbour.
    if (i + 1 < n) {
      c.f[kMinus] = post[i + 1].f[kMinus];
      c.g[1] = post[i + 1].g[1];
    } else {
      switch (bc.right.kind) {
        case BoundaryKind::Periodic:
          c.f[kMinus] = post[0].f[kMinus];
          c.g[1] = post[0].g[1];
          break;
        case BoundaryKind::Inflow:
          c.f[kMinus] = right_eq.f[kMinus];
          c.g[1] = right_eq.g[1];
          break;
        case BoundaryKind::Outflow:
          c.f[kMinus] = post[i].f[kMinus];
          c.g[1] = post[i].g[1];
          break;
        case BoundaryKind::Wall:
          c.f[kMinus] = post[i].f[kPlus];
          c.g[1] = -post[i].g[0];
          break;
      }
    }
    out[i] = c;
  });
  std::swap(field.cells, field.next);
}

std::vector<MacroState1D> macro_fields(const Field1D& field) {
  std::vector<MacroState1D> out(field.size());
  std::transform(field.cells.begin(), field.cells.end(), out.begin(), [](const Cell1D& c) { return c.macro(); });
  return out;
}

namespace {

void record(const Field1D& field, const Lbm1DSetup& setup, Diagnostics1D& diag) {
  double mass = 0.0;
  double momentum = 0.0;
  double min_rho = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  for (const Cell1D& c : field.cells) {
    const double rho = c.rho();
    mass += rho;
    momentum += c.q();
    min_rho = std::min(min_rho, rho);
    if (rho > 0.0) {
      const double speed = std::abs(c.q() / rho) + sound_speed(rho, setup.kp.phys());
      max_ratio = std::max(max_ratio, speed / setup.kp.lambda());
    }
  }
  const double dx = setup.grid.dx;
  diag.mass.push_back(mass * dx);
  diag.momentum.push_back(momentum * dx);
  diag.min_rho = diag.mass.size() == 1 ? min_rho : std::min(diag.min_rho, min_rho);
  if (max_ratio > 0.9 && diag.max_signal_ratio <= 0.9) {
    std::ostringstream msg;
    msg << "sub-characteristic margin violated: max(|u|+c) = " << max_ratio << " lambda";
    diag.warnings.push_back(msg.str());
  }
  diag.max_signal_ratio = std::max(diag.max_signal_ratio, max_ratio);
  if (setup.track_entropy) {
    const MicroscopicEntropy h = microscopic_entropy_total(field.cells, setup.kp);
    diag.entropy.push_back(h.H * dx);
    diag.entropy_failures.push_back(h.failed_nodes);
  }
}

}  // namespace

Trajectory1D run_1d(const Lbm1DSetup& setup) {
  setup.grid.validate();
  if (static_cast<int>(setup.initial.size()) != setup.grid.n_cells) {
    throw std::invalid_argument("initial state size does not match the grid");
  }
  if ((setup.bc.left.kind == BoundaryKind::Periodic) != (setup.bc.right.kind == BoundaryKind::Periodic)) {
    throw std::invalid_argument("periodic boundaries must be set on both sides");
  }
  for (std::size_t i = 0; i < setup.initial.size(); ++i) {
    if (!(setup.initial[i].rho > 0.0)) throw BlowUpError(i, 0, "non-positive initial density");
  }

  Trajectory1D traj;
  Field1D field = equilibrium_field(setup.initial, setup.kp);
  const double dt = setup.grid.dt();
  traj.snapshots.push_back({0, 0.0, macro_fields(field)});
  record(field, setup, traj.diagnostics);

  for (long step = 1; step <= setup.n_steps; ++step) {
    collide_field(field, setup.kp, setup.s, step, setup.threads);
    stream(field, setup.bc, setup.kp, setup.threads);
    record(field, setup, traj.diagnostics);
    const bool cadence = setup.output_every > 0 && step % setup.output_every == 0;
    if (cadence || step == setup.n_steps) {
      traj.snapshots.push_back({step, step * dt, macro_fields(field)});
    }
  }
  traj.final_field = std::move(field);
  return traj;
}

}  // namespace swlbm
