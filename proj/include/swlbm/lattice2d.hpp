#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swlbm/kinetics.hpp"
#include "swlbm/lattice1d.hpp"
#include "swlbm/populations.hpp"

namespace swlbm {

/// Square-cell Cartesian grid with an obstacle mask (1 = solid).
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double lambda = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<std::uint8_t> solid;

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  bool is_solid(int i, int j) const { return !solid.empty() && solid[index(i, j)] != 0; }
  double dt() const { return dx / lambda; }
  double x(int i) const { return x0 + (i + 0.5) * dx; }
  double y(int j) const { return y0 + (j + 0.5) * dx; }
  void validate() const;
};

/// The 13 moments of a D2Q5Q4Q4 cell.
struct Moments2D {
  double rho = 0.0, Jx_rho = 0.0, Jy_rho = 0.0, eps_rho = 0.0, XX_rho = 0.0;
  double qx = 0.0, fxx = 0.0, fxy = 0.0, XX_u = 0.0;
  double qy = 0.0, fyx = 0.0, fyy = 0.0, XX_v = 0.0;
};

/// Relaxation rates for (Jx_rho, Jy_rho, eps_rho, XX_rho, fxx, fxy, XX_u, fyx, fyy, XX_v).
using Rates2D = std::array<double, 10>;

Moments2D moments_from_populations(const Cell2D& cell, double lambda);
Cell2D populations_from_moments(const Moments2D& m, double lambda);

Moments2D equilibrium_moments(const MacroState2D& state, const KineticParams& kp);

Cell2D collide(const Cell2D& cell, const KineticParams& kp, const Rates2D& s);

struct SideBoundary2D {
  BoundaryKind kind = BoundaryKind::Periodic;
  MacroState2D state{};
};

struct Boundaries2D {
  SideBoundary2D left;
  SideBoundary2D right;
  SideBoundary2D bottom;
  SideBoundary2D top;
};

struct Field2D {
  std::vector<Cell2D> cells;
  std::vector<Cell2D> next;

  explicit Field2D(std::size_t n = 0) : cells(n), next(n) {}
  std::size_t size() const { return cells.size(); }
};

/// Equilibrium populations of `states` on fluid cells; solid cells stay zero.
Field2D equilibrium_field(const Grid2D& grid, std::span<const MacroState2D> states, const KineticParams& kp);

void collide_field(Field2D& field, const Grid2D& grid, const KineticParams& kp, const Rates2D& s, long step,
                   int threads = 1);

/// Mass carried through open (inflow/outflow) domain sides during one stream.
struct BoundaryMassFlux {
  double in = 0.0;
  double out = 0.0;
};

/**
 * @brief Pull streaming on the D2Q5 velocities.
 *
 * Walls (domain sides of kind Wall and faces of solid cells) sit half-way
 * between cells and reflect specularly: the outgoing population comes back
 * with the opposite velocity, f unchanged, the wall-normal momentum family
 * negated and the tangential family unchanged. Inflow sides inject the
 * equilibrium of their state, outflow sides copy the boundary cell.
 */
BoundaryMassFlux stream(Field2D& field, const Grid2D& grid, const Boundaries2D& bc, const KineticParams& kp,
                        int threads = 1);

struct Lbm2DSetup {
  Grid2D grid;
  KineticParams kp{0.05, 8.0};
  Rates2D s{1.8, 1.8, 1.8, 1.8, 1.8, 1.8, 1.8, 1.8, 1.8, 1.8};
  Boundaries2D bc;
  std::vector<MacroState2D> initial;
  long n_steps = 0;
  long output_every = 0;
  /// Stop early once the mean |rho^{n+1} - rho^n| over fluid cells drops below this (0 disables).
  double steady_tol = 0.0;
  int threads = 1;
};

struct Snapshot2D {
  long step = 0;
  double time = 0.0;
  std::vector<MacroState2D> state;
};

struct Diagnostics2D {
  std::vector<double> mass;
  std::vector<double> momentum_x;
  std::vector<double> momentum_y;
  /// Per step (index 0 unused): open-boundary mass flux times cell area.
  std::vector<BoundaryMassFlux> boundary_flux;
  double min_rho = 0.0;
  double max_signal_ratio = 0.0;
  double last_change = 0.0;
  bool reached_steady = false;
  long steps = 0;
  std::vector<std::string> warnings;
};

struct Trajectory2D {
  std::vector<Snapshot2D> snapshots;
  Diagnostics2D diagnostics;
};

Trajectory2D run_2d(const Lbm2DSetup& setup);

/// Macroscopic fields; solid cells report rho = 0 and zero momentum.
std::vector<MacroState2D> macro_fields(const Field2D& field, const Grid2D& grid);

}  // namespace swlbm
