#pragma once

#include <array>

namespace swlbm {

/**
 * @brief Pressure law p = p0 (rho/rho0)^gamma and its derived constants.
 *
 * The shallow-water normalization rho0 = 1, p0 = 1/2, gamma = 2 gives
 * p = rho^2/2 and c0 = 1.
 */
class PhysParams {
 public:
  PhysParams() : PhysParams(2.0, 1.0, 0.5) {}
  PhysParams(double gamma, double rho0, double p0);

  double gamma() const { return gamma_; }
  double rho0() const { return rho0_; }
  double p0() const { return p0_; }

  /// Reference sound speed, c0^2 = gamma p0 / rho0.
  double c0() const { return c0_; }
  /// Dual-entropy coefficient K = p0 / c0^4.
  double K() const { return K_; }
  /// p0 / rho0^gamma, the coefficient in front of rho^gamma.
  double kappa() const { return kappa_; }

  bool is_shallow_water() const { return gamma_ == 2.0; }

 private:
  double gamma_;
  double rho0_;
  double p0_;
  double c0_;
  double K_;
  double kappa_;
};

struct MacroState1D {
  double rho = 0.0;
  double q = 0.0;

  double u() const { return q / rho; }
};

struct MacroState2D {
  double rho = 0.0;
  double qx = 0.0;
  double qy = 0.0;

  double u() const { return qx / rho; }
  double v() const { return qy / rho; }

  static MacroState2D from_primitive(double rho, double u, double v) { return {rho, rho * u, rho * v}; }
};

/// Gradient of the entropy with respect to (rho, q): theta and the velocity.
struct EntropyVars1D {
  double theta = 0.0;
  double beta = 0.0;
};

struct EntropyVars2D {
  double theta = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct EntropyPair1D {
  double eta;
  double zeta;
};

struct EntropyPair2D {
  double eta;
  std::array<double, 2> zeta;
};

struct DualEntropy1D {
  double eta_star;
  double zeta_star;
};

struct DualEntropy2D {
  double eta_star;
  std::array<double, 2> zeta_star;
};

struct Flux1D {
  double mass;
  double momentum;
};

/// Rows are (rho, qx, qy); columns the x and y directions.
using Flux2D = std::array<std::array<double, 2>, 3>;

double pressure(double rho, const PhysParams& params);
double sound_speed(double rho, const PhysParams& params);

EntropyPair1D entropy_pair(const MacroState1D& state, const PhysParams& params);
EntropyPair2D entropy_pair(const MacroState2D& state, const PhysParams& params);

EntropyVars1D entropy_vars(const MacroState1D& state, const PhysParams& params);
EntropyVars2D entropy_vars(const MacroState2D& state, const PhysParams& params);

/// Inverse of entropy_vars, gamma = 2 only: rho = 2K(theta + |beta|^2/2).
MacroState1D state_from_entropy_vars(const EntropyVars1D& phi, const PhysParams& params);
MacroState2D state_from_entropy_vars(const EntropyVars2D& phi, const PhysParams& params);

/// eta* = K (theta + |beta|^2/2)^2 and zeta* = eta* beta, gamma = 2 only.
DualEntropy1D dual_entropy(const EntropyVars1D& phi, const PhysParams& params);
DualEntropy2D dual_entropy(const EntropyVars2D& phi, const PhysParams& params);

Flux1D flux(const MacroState1D& state, const PhysParams& params);
Flux2D flux(const MacroState2D& state, const PhysParams& params);

/// Flux through a face with unit normal (nx, ny), ordered (rho, qx, qy).
std::array<double, 3> normal_flux(const MacroState2D& state, double nx, double ny, const PhysParams& params);

}  // namespace swlbm
