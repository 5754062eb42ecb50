#include "swlbm/godunov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swlbm/errors.hpp"
#include "swlbm/parallel.hpp"
#include "swlbm/riemann.hpp"

namespace swlbm {

namespace {

MacroState1D ghost_state(const SideBoundary1D& side, const MacroState1D& inside,
                         const MacroState1D& periodic_partner) {
  switch (side.kind) {
    case BoundaryKind::Periodic: return periodic_partner;
    case BoundaryKind::Inflow: return side.state;
    case BoundaryKind::Outflow: return inside;
    case BoundaryKind::Wall: return {inside.rho, -inside.q};
  }
  return inside;
}

MacroState2D mirror(const MacroState2D& s, bool x_normal) {
  return x_normal ? MacroState2D{s.rho, -s.qx, s.qy} : MacroState2D{s.rho, s.qx, -s.qy};
}

void check_positive(std::span<const double> rho, long step, const char* what) {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0.0) || !std::isfinite(rho[i])) {
      std::ostringstream msg;
      msg << what << ": density failure at cell " << i << ", step " << step << " (rho = " << rho[i] << ")";
      throw BlowUpError(i, step, msg.str());
    }
  }
}

}  // namespace

Flux1D godunov_flux(const MacroState1D& left, const MacroState1D& right, const PhysParams& params) {
  const RiemannSolution sol = exact_riemann({left.rho, left.u()}, {right.rho, right.u()}, params);
  const Primitive1D s = sol.sample(0.0);
  return flux(MacroState1D{s.rho, s.rho * s.u}, params);
}

std::array<double, 3> godunov_flux(const MacroState2D& left, const MacroState2D& right, bool x_normal,
                                   const PhysParams& params) {
  const double un_l = x_normal ? left.u() : left.v();
  const double un_r = x_normal ? right.u() : right.v();
  const double ut_l = x_normal ? left.v() : left.u();
  const double ut_r = x_normal ? right.v() : right.u();
  const RiemannSolution sol = exact_riemann({left.rho, un_l}, {right.rho, un_r}, params);
  const Primitive1D s = sol.sample(0.0);
  const double ut = sol.u_star() >= 0.0 ? ut_l : ut_r;
  const double mass = s.rho * s.u;
  const double normal = mass * s.u + pressure(s.rho, params);
  const double transverse = mass * ut;
  if (x_normal) return {mass, normal, transverse};
  return {mass, transverse, normal};
}

GodunovStep1D godunov_step(std::vector<MacroState1D>& states, double dx, const Boundaries1D& bc,
                           const PhysParams& params, double cfl, double dt_max, int threads) {
  const std::size_t n = states.size();
  if (n < 2) throw DomainError("Godunov 1D needs at least two cells");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");

  double max_speed = 0.0;
  for (const MacroState1D& s : states) {
    if (!(s.rho > 0.0)) throw DomainError("Godunov step called with non-positive density");
    max_speed = std::max(max_speed, std::abs(s.u()) + sound_speed(s.rho, params));
  }
  const double dt = std::min(cfl * dx / max_speed, dt_max);

  // Face f sits between cells f-1 and f.
  std::vector<Flux1D> faces(n + 1);
  parallel_for(n + 1, threads, [&](std::size_t f) {
    const MacroState1D left =
        f == 0 ? ghost_state(bc.left, states.front(), states.back()) : states[f - 1];
    const MacroState1D right =
        f == n ? ghost_state(bc.right, states.back(), states.front()) : states[f];
    faces[f] = godunov_flux(left, right, params);
  });

  const double ratio = dt / dx;
  parallel_for(n, threads, [&](std::size_t i) {
    states[i].rho -= ratio * (faces[i + 1].mass - faces[i].mass);
    states[i].q -= ratio * (faces[i + 1].momentum - faces[i].momentum);
  });

  GodunovStep1D result;
  result.dt = dt;
  result.inflow.mass = dt * (faces[0].mass - faces[n].mass);
  result.inflow.momentum = dt * (faces[0].momentum - faces[n].momentum);
  return result;
}

GodunovStep2D godunov_step(std::vector<MacroState2D>& states, const Grid2D& grid, const Boundaries2D& bc,
                           const PhysParams& params, double cfl, double dt_max, int threads) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  if (states.size() != grid.size()) throw DomainError("state size does not match the grid");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");

  double max_speed = 0.0;
  for (std::size_t c = 0; c < states.size(); ++c) {
    if (grid.is_solid(static_cast<int>(c % nx), static_cast<int>(c / nx))) continue;
    const MacroState2D& s = states[c];
    if (!(s.rho > 0.0)) throw DomainError("Godunov step called with non-positive density");
    max_speed = std::max(max_speed, std::max(std::abs(s.u()), std::abs(s.v())) + sound_speed(s.rho, params));
  }
  const double dt = std::min(cfl * grid.dx / max_speed, dt_max);

  auto ghost = [&](const SideBoundary2D& side, int i, int j, int pi, int pj, bool x_normal) {
    const MacroState2D& inside = states[grid.index(i, j)];
    switch (side.kind) {
      case BoundaryKind::Periodic:
        return grid.is_solid(pi, pj) ? mirror(inside, x_normal) : states[grid.index(pi, pj)];
      case BoundaryKind::Inflow: return side.state;
      case BoundaryKind::Outflow: return inside;
      case BoundaryKind::Wall: return mirror(inside, x_normal);
    }
    return inside;
  };

  using Flux3 = std::array<double, 3>;
  std::vector<Flux3> fx(static_cast<std::size_t>(nx + 1) * ny, Flux3{});
  std::vector<Flux3> fy(static_cast<std::size_t>(nx) * (ny + 1), Flux3{});

  // x-face (i, j) separates cells (i-1, j) and (i, j).
  parallel_for(fx.size(), threads, [&](std::size_t f) {
    const int i = static_cast<int>(f % (nx + 1));
    const int j = static_cast<int>(f / (nx + 1));
    const bool left_in = i > 0 && !grid.is_solid(i - 1, j);
    const bool right_in = i < nx && !grid.is_solid(i, j);
    if (!left_in && !right_in) return;
    MacroState2D left, right;
    if (left_in && right_in) {
      left = states[grid.index(i - 1, j)];
      right = states[grid.index(i, j)];
    } else if (left_in) {
      left = states[grid.index(i - 1, j)];
      right = i == nx ? ghost(bc.right, i - 1, j, 0, j, true) : mirror(left, true);
    } else {
      right = states[grid.index(i, j)];
      left = i == 0 ? ghost(bc.left, i, j, nx - 1, j, true) : mirror(right, true);
    }
    fx[f] = godunov_flux(left, right, true, params);
  });

  // y-face (i, j) separates cells (i, j-1) and (i, j).
  parallel_for(fy.size(), threads, [&](std::size_t f) {
    const int i = static_cast<int>(f % nx);
    const int j = static_cast<int>(f / nx);
    const bool low_in = j > 0 && !grid.is_solid(i, j - 1);
    const bool high_in = j < ny && !grid.is_solid(i, j);
    if (!low_in && !high_in) return;
    MacroState2D low, high;
    if (low_in && high_in) {
      low = states[grid.index(i, j - 1)];
      high = states[grid.index(i, j)];
    } else if (low_in) {
      low = states[grid.index(i, j - 1)];
      high = j == ny ? ghost(bc.top, i, j - 1, i, 0, false) : mirror(low, false);
    } else {
      high = states[grid.index(i, j)];
      low = j == 0 ? ghost(bc.bottom, i, j, i, ny - 1, false) : mirror(high, false);
    }
    fy[f] = godunov_flux(low, high, false, params);
  });

  const double ratio = dt / grid.dx;
  parallel_for(grid.size(), threads, [&](std::size_t c) {
    const int i = static_cast<int>(c % nx);
    const int j = static_cast<int>(c / nx);
    if (grid.is_solid(i, j)) return;
    const Flux3& west = fx[static_cast<std::size_t>(j) * (nx + 1) + i];
    const Flux3& east = fx[static_cast<std::size_t>(j) * (nx + 1) + i + 1];
    const Flux3& south = fy[static_cast<std::size_t>(j) * nx + i];
    const Flux3& north = fy[static_cast<std::size_t>(j + 1) * nx + i];
    MacroState2D& s = states[c];
    s.rho -= ratio * (east[0] - west[0] + north[0] - south[0]);
    s.qx -= ratio * (east[1] - west[1] + north[1] - south[1]);
    s.qy -= ratio * (east[2] - west[2] + north[2] - south[2]);
  });

  GodunovStep2D result;
  result.dt = dt;
  const double scale = dt * grid.dx;
  for (int j = 0; j < ny; ++j) {
    const Flux3& west = fx[static_cast<std::size_t>(j) * (nx + 1)];
    const Flux3& east = fx[static_cast<std::size_t>(j) * (nx + 1) + nx];
    result.inflow.mass += scale * (west[0] - east[0]);
    result.inflow.momentum_x += scale * (west[1] - east[1]);
    result.inflow.momentum_y += scale * (west[2] - east[2]);
  }
  for (int i = 0; i < nx; ++i) {
    const Flux3& south = fy[i];
    const Flux3& north = fy[static_cast<std::size_t>(ny) * nx + i];
    result.inflow.mass += scale * (south[0] - north[0]);
    result.inflow.momentum_x += scale * (south[1] - north[1]);
    result.inflow.momentum_y += scale * (south[2] - north[2]);
  }
  return result;
}

GodunovRun1D run_godunov_1d(std::vector<MacroState1D> states, double dx, const Boundaries1D& bc,
                            const PhysParams& params, double cfl, double t_end, long output_every, int threads) {
  GodunovRun1D run;
  auto totals = [&] {
    double m = 0.0, q = 0.0;
    for (const MacroState1D& s : states) m += s.rho, q += s.q;
    run.mass.push_back(m * dx);
    run.momentum.push_back(q * dx);
  };
  run.snapshots.push_back({0, 0.0, states});
  totals();
  run.inflow.push_back({});

  double t = 0.0;
  long step = 0;
  std::vector<double> rho(states.size());
  while (t < t_end * (1.0 - 1e-14)) {
    const GodunovStep1D res = godunov_step(states, dx, bc, params, cfl, t_end - t, threads);
    t += res.dt;
    ++step;
    for (std::size_t i = 0; i < states.size(); ++i) rho[i] = states[i].rho;
    check_positive(rho, step, "Godunov 1D");
    totals();
    run.inflow.push_back(res.inflow);
    const bool last = t >= t_end * (1.0 - 1e-14);
    if (last || (output_every > 0 && step % output_every == 0)) run.snapshots.push_back({step, t, states});
  }
  run.steps = step;
  return run;
}

GodunovRun2D run_godunov_2d(std::vector<MacroState2D> states, const Grid2D& grid, const Boundaries2D& bc,
                            const PhysParams& params, double cfl, double t_end, long output_every,
                            double steady_tol, int threads) {
  GodunovRun2D run;
  std::vector<std::size_t> fluid;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (!grid.is_solid(static_cast<int>(c % grid.nx), static_cast<int>(c / grid.nx))) fluid.push_back(c);
  }
  auto total_mass = [&] {
    double m = 0.0;
    for (std::size_t c : fluid) m += states[c].rho;
    return m * grid.dx * grid.dx;
  };
  run.snapshots.push_back({0, 0.0, states});
  run.mass.push_back(total_mass());

  double t = 0.0;
  long step = 0;
  std::vector<double> previous(grid.size());
  while (t < t_end * (1.0 - 1e-14)) {
    for (std::size_t c : fluid) previous[c] = states[c].rho;
    const GodunovStep2D res = godunov_step(states, grid, bc, params, cfl, t_end - t, threads);
    t += res.dt;
    ++step;
    for (std::size_t c : fluid) {
      if (!(states[c].rho > 0.0) || !std::isfinite(states[c].rho)) {
        std::ostringstream msg;
        msg << "Godunov 2D: density failure at cell (" << c % grid.nx << ", " << c / grid.nx << "), step " << step;
        throw BlowUpError(c, step, msg.str());
      }
    }
    run.mass.push_back(total_mass());

    bool stop = false;
    if (steady_tol > 0.0) {
      double change = 0.0;
      for (std::size_t c : fluid) change += std::abs(states[c].rho - previous[c]);
      run.last_change = change / static_cast<double>(fluid.size());
      stop = run.last_change < steady_tol;
      run.reached_steady = stop;
    }
    const bool last = stop || t >= t_end * (1.0 - 1e-14);
    if (last || (output_every > 0 && step % output_every == 0)) run.snapshots.push_back({step, t, states});
    if (stop) break;
  }
  run.steps = step;
  return run;
}

}  // namespace swlbm
