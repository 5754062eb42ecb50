#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "swlbm/riemann.hpp"

namespace swlbm {

/// Cell-centred macroscopic fields on a uniform grid, in 1D (ny = 1) or 2D.
struct FieldSnapshot {
  int dim = 1;
  int nx = 0;
  int ny = 1;
  double dx = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  long step = 0;
  double time = 0.0;
  /// Empty, or one flag per cell (1 = solid, excluded from every norm).
  std::vector<std::uint8_t> solid;
  std::vector<double> rho;
  std::vector<double> u;
  std::vector<double> v;

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  double x(int i) const { return x0 + (i + 0.5) * dx; }
  double y(int j) const { return y0 + (j + 0.5) * dx; }
  bool is_solid(std::size_t k) const { return !solid.empty() && solid[k] != 0; }
};

/// Reference density at a point.
using DensitySampler = std::function<double(double x, double y)>;

/**
 * @brief L1 norm of rho - reference over fluid cells, divided by the fluid measure.
 *
 * The reference is cell-averaged with `subsamples` points per direction
 * (midpoint rule), so a discontinuity cutting a cell is weighted by area.
 */
double l1_error(const FieldSnapshot& field, const DensitySampler& reference, int subsamples = 8);

/// L1 difference between the densities of two fields on the same grid, per unit measure.
/// Throws std::invalid_argument on mismatched shapes.
double l1_difference(const FieldSnapshot& a, const FieldSnapshot& b);

/// Location of the largest |rho_{i+1} - rho_i| refined to the crossing of the
/// mid-level between the two plateaus bracketing it. Searches [x_lo, x_hi].
/// Throws MetricUnavailable if the jump is below 5% of max rho.
double shock_position_1d(const FieldSnapshot& field, double x_lo = -1e300, double x_hi = 1e300);

/// Estimated edges of a 1D rarefaction fan in a numerical solution.
struct RarefactionEdges {
  double head = 0.0;
  double tail = 0.0;
};

/**
 * @brief Fan edges of the left rarefaction of `exact` at `field.time`.
 *
 * Inside a gamma = 2 rarefaction the sound speed sqrt(rho) is linear in x.
 * A least-squares line through the cells whose density lies in the middle
 * 60% of the fan's range is intersected with the end-state sound speeds.
 * Diffusive rounding of the corners therefore does not bias the estimate.
 */
RarefactionEdges rarefaction_edges(const FieldSnapshot& field, const RiemannSolution& exact, double diaphragm);

/// Plateau statistics of cells with centres in (x_lo, x_hi).
struct PlateauStats {
  double mean = 0.0;
  double max_rel_deviation = 0.0;
  int cells = 0;
};

PlateauStats plateau(const FieldSnapshot& field, double x_lo, double x_hi, double target);

/// Reflected-front angle in degrees: the largest |rho_{j+1} - rho_j| per column
/// with centre in [x_lo, x_hi], then a least-squares line through those points.
/// Throws MetricUnavailable if the density range of a column is below 5% of max rho.
double reflected_shock_angle(const FieldSnapshot& field, double x_lo = 1.1, double x_hi = 1.6);

/// Detached bow shock ahead of an obstacle.
struct BowShock {
  /// Left edge of the first column whose mean density exceeds the inflow column by `rise`.
  double x = 0.0;
  double peak_ratio = 0.0;
};

/// Scans fluid column means left to right up to `x_limit`. Throws MetricUnavailable if none rises enough.
BowShock bow_shock(const FieldSnapshot& field, double x_limit, double rise = 0.2);

}  // namespace swlbm
