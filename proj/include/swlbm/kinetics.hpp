#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "swlbm/physics.hpp"
#include "swlbm/populations.hpp"

namespace swlbm {

/**
 * @brief Parameters of the kinetic decomposition of the dual entropy.
 *
 * `a` weights the rest-velocity potential h0* = (a/2) K theta^2; `lambda` is
 * the lattice velocity dx/dt.
 */
class KineticParams {
 public:
  KineticParams(double a, double lambda, PhysParams phys = {});

  double a() const { return a_; }
  double lambda() const { return lambda_; }
  const PhysParams& phys() const { return phys_; }

 private:
  double a_;
  double lambda_;
  PhysParams phys_;
};

// Velocity indices. 1D: f over (0, +, -); g over (+, -).
// 2D: f over (0, +x, +y, -x, -y); gx, gy over the four moving velocities.
inline constexpr int kRest = 0;
inline constexpr int kPlus = 1;
inline constexpr int kMinus = 2;

struct Equilibrium1D {
  std::array<double, 3> f{};
  std::array<double, 2> g{};
};

struct Equilibrium2D {
  std::array<double, 5> f{};
  std::array<double, 4> gx{};
  std::array<double, 4> gy{};
};

/// Potentials h_j*(theta, beta) of the D1Q3 decomposition, j in {kRest, kPlus, kMinus}.
double h_star_1d(int j, const EntropyVars1D& phi, const KineticParams& kp);

/// Potentials h_j*(theta, u, v) of the D2Q5 decomposition, j in 0..4.
double h_star_2d(int j, const EntropyVars2D& phi, const KineticParams& kp);

/// Value, gradient and Hessian of one potential with respect to the
/// `dim + 1` entropy variables (theta, beta...) packed in `phi`.
struct PotentialDerivatives {
  double value = 0.0;
  std::array<double, 3> grad{};
  std::array<std::array<double, 3>, 3> hess{};
};

PotentialDerivatives potential_derivatives(int dim, int j, std::span<const double> phi, const KineticParams& kp);

/// Closed-form equilibria, the gradients of the potentials.
Equilibrium1D equilibrium_1d(const MacroState1D& state, const KineticParams& kp);
Equilibrium2D equilibrium_2d(const MacroState2D& state, const KineticParams& kp);

struct ConvexityReport {
  bool convex = true;
  double min_eigenvalue = 0.0;
  int worst_potential = -1;
};

/**
 * @brief Finite-difference Hessian test of every potential at `phi`.
 *
 * Step h = 1e-5 (|phi| + 1). A potential counts as convex when its smallest
 * eigenvalue is above -1e-6 (1 + max |H_ik|), the round-off level of the
 * second differences.
 */
ConvexityReport hessian_convexity_check(std::span<const double> phi, const KineticParams& kp, int dim);

struct LegendreResult {
  double value = 0.0;
  std::array<double, 3> maximizer{};
  int n_vars = 0;
  int iterations = 0;
};

/**
 * @brief Legendre dual h_j(f_j) = sup_phi (phi . f_j - h_j*(phi)).
 *
 * For the rest velocity only theta enters (there is no momentum population),
 * so `populations` holds {f_0}; otherwise {f_j, g_j} in 1D and
 * {f_j, gx_j, gy_j} in 2D, where j indexes the f velocities. Damped Newton from
 * `guess` (full entropy variables), gradient tolerance 1e-10, at most 100
 * iterations. Throws ConvergenceError carrying the last iterate.
 */
LegendreResult legendre_value(int dim, int j, std::span<const double> populations, const KineticParams& kp,
                              std::span<const double> guess);

struct MicroscopicEntropy {
  double H = 0.0;
  std::size_t failed_nodes = 0;
};

/// H = sum over nodes and velocities of h_j(f_j). Nodes whose transform fails
/// are skipped and counted.
MicroscopicEntropy microscopic_entropy_total(std::span<const Cell1D> cells, const KineticParams& kp);
MicroscopicEntropy microscopic_entropy_total(std::span<const Cell2D> cells, const KineticParams& kp);

}  // namespace swlbm
