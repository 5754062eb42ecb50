#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swlbm/kinetics.hpp"
#include "swlbm/populations.hpp"

namespace swlbm {

struct Grid1D {
  int n_cells = 0;
  double dx = 0.0;
  double lambda = 0.0;
  double x0 = 0.0;

  double dt() const { return dx / lambda; }
  double x(int i) const { return x0 + (i + 0.5) * dx; }
  void validate() const;
};

struct Moments1D {
  double rho = 0.0;
  double J_rho = 0.0;
  double eps_rho = 0.0;
  double q = 0.0;
  double J_q = 0.0;
};

/// Relaxation rates for (J_rho, eps_rho, J_q).
using Rates1D = std::array<double, 3>;

Moments1D moments_from_populations(const Cell1D& cell, double lambda);
Cell1D populations_from_moments(const Moments1D& m, double lambda);

Moments1D equilibrium_moments(const MacroState1D& state, const KineticParams& kp);

/// MRT relaxation m* = m + s (m_eq - m) on the non-conserved moments.
/// Throws DomainError if the cell density is not positive.
Cell1D collide(const Cell1D& cell, const KineticParams& kp, const Rates1D& s);

enum class BoundaryKind { Periodic, Wall, Inflow, Outflow };

/// Inflow means Dirichlet: incoming populations are the equilibrium of `state`.
struct SideBoundary1D {
  BoundaryKind kind = BoundaryKind::Periodic;
  MacroState1D state{};
};

struct Boundaries1D {
  SideBoundary1D left;
  SideBoundary1D right;
};

/// Populations plus the buffer streaming writes into.
struct Field1D {
  std::vector<Cell1D> cells;
  std::vector<Cell1D> next;

  explicit Field1D(std::size_t n = 0) : cells(n), next(n) {}
  std::size_t size() const { return cells.size(); }
};

Field1D equilibrium_field(std::span<const MacroState1D> states, const KineticParams& kp);

/// Collides every cell in place; BlowUpError names the first bad cell and `step`.
void collide_field(Field1D& field, const KineticParams& kp, const Rates1D& s, long step, int threads = 1);

/// Pull streaming: + populations move one cell right, - populations one cell left.
void stream(Field1D& field, const Boundaries1D& bc, const KineticParams& kp, int threads = 1);

struct Lbm1DSetup {
  Grid1D grid;
  KineticParams kp{0.15, 8.0};
  Rates1D s{1.8, 1.8, 1.8};
  Boundaries1D bc;
  std::vector<MacroState1D> initial;
  long n_steps = 0;
  /// Snapshot cadence in steps; 0 keeps only the initial and final states.
  long output_every = 0;
  bool track_entropy = false;
  int threads = 1;
};

struct Snapshot1D {
  long step = 0;
  double time = 0.0;
  std::vector<MacroState1D> state;
};

struct Diagnostics1D {
  /// Per step, index 0 is the initial state.
  std::vector<double> mass;
  std::vector<double> momentum;
  std::vector<double> entropy;
  std::vector<std::size_t> entropy_failures;
  double min_rho = 0.0;
  /// max(|u| + c) / lambda over the run.
  double max_signal_ratio = 0.0;
  std::vector<std::string> warnings;
};

struct Trajectory1D {
  std::vector<Snapshot1D> snapshots;
  Diagnostics1D diagnostics;
  Field1D final_field;
};

/// Collide-then-stream loop; snapshots are taken after streaming.
Trajectory1D run_1d(const Lbm1DSetup& setup);

std::vector<MacroState1D> macro_fields(const Field1D& field);

}  // namespace swlbm
