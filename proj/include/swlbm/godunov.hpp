#pragma once

#include <array>
#include <limits>
#include <vector>

#include "swlbm/lattice1d.hpp"
#include "swlbm/lattice2d.hpp"
#include "swlbm/physics.hpp"

namespace swlbm {

/// Net conserved quantities that entered the domain through its sides during
/// one step (already multiplied by dt and face length).
struct BoundaryInflow1D {
  double mass = 0.0;
  double momentum = 0.0;
};

struct BoundaryInflow2D {
  double mass = 0.0;
  double momentum_x = 0.0;
  double momentum_y = 0.0;
};

struct GodunovStep1D {
  double dt = 0.0;
  BoundaryInflow1D inflow;
};

struct GodunovStep2D {
  double dt = 0.0;
  BoundaryInflow2D inflow;
};

/// Interface flux from the exact Riemann solution sampled at x/t = 0.
Flux1D godunov_flux(const MacroState1D& left, const MacroState1D& right, const PhysParams& params);

/// Flux through an x-face (`x_normal`) or y-face; transverse momentum is
/// carried passively from the upwind side of the contact.
std::array<double, 3> godunov_flux(const MacroState2D& left, const MacroState2D& right, bool x_normal,
                                   const PhysParams& params);

/**
 * @brief One first-order Godunov step, dt = cfl dx / max(|u| + c), capped at `dt_max`.
 *
 * Ghost cells: Inflow holds the side state, Outflow copies the boundary cell,
 * Wall mirrors it with the normal velocity reversed, Periodic wraps.
 * Throws BlowUpError if a density becomes non-positive.
 */
GodunovStep1D godunov_step(std::vector<MacroState1D>& states, double dx, const Boundaries1D& bc,
                           const PhysParams& params, double cfl,
                           double dt_max = std::numeric_limits<double>::infinity(), int threads = 1);

/// Unsplit 2D step with per-face normal Riemann problems. Solid cells are
/// skipped and their faces act as walls. dt uses max(|u|, |v|) + c.
GodunovStep2D godunov_step(std::vector<MacroState2D>& states, const Grid2D& grid, const Boundaries2D& bc,
                           const PhysParams& params, double cfl,
                           double dt_max = std::numeric_limits<double>::infinity(), int threads = 1);

struct GodunovRun1D {
  std::vector<Snapshot1D> snapshots;
  long steps = 0;
  std::vector<double> mass;
  std::vector<double> momentum;
  std::vector<BoundaryInflow1D> inflow;
};

struct GodunovRun2D {
  std::vector<Snapshot2D> snapshots;
  long steps = 0;
  std::vector<double> mass;
  bool reached_steady = false;
  double last_change = 0.0;
};

/// Advances to `t_end`; snapshots every `output_every` steps (0: initial and final only).
GodunovRun1D run_godunov_1d(std::vector<MacroState1D> initial, double dx, const Boundaries1D& bc,
                            const PhysParams& params, double cfl, double t_end, long output_every = 0,
                            int threads = 1);

/// As the 1D driver; stops early when the mean |delta rho| per step falls below `steady_tol` (0 disables).
GodunovRun2D run_godunov_2d(std::vector<MacroState2D> initial, const Grid2D& grid, const Boundaries2D& bc,
                            const PhysParams& params, double cfl, double t_end, long output_every = 0,
                            double steady_tol = 0.0, int threads = 1);

}  // namespace swlbm
