#pragma once

#include <array>

#include "swlbm/physics.hpp"

namespace swlbm {

struct Primitive2D {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;

  MacroState2D conserved() const { return MacroState2D::from_primitive(rho, u, v); }
};

/**
 * @brief The three constant states of the stationary regular shock reflection.
 *
 * The incident shock is the line x + y = 1; it meets the bottom wall at
 * (1, 0), where the reflected shock starts.
 */
struct ReflectionStates {
  Primitive2D left;
  Primitive2D top;
  Primitive2D right;

  /// Published state values, valid for p = rho^2 / 2.
  static ReflectionStates published();

  /// Slope of the reflected front through (1, 0), from continuity of the
  /// tangential velocity between the top and right states.
  double reflected_slope() const;
};

/// Piecewise-constant exact field on [0, 1.75] x [0, 1].
Primitive2D reflection_exact(double x, double y, const ReflectionStates& states);

/// Unit normal of the reflected front, pointing from the top state into the right state.
std::array<double, 2> reflected_front_normal(const ReflectionStates& states);

/// || F_n(B) - F_n(A) - sigma (U(B) - U(A)) || over mass and both momenta.
double rh_residual(const Primitive2D& a, const Primitive2D& b, std::array<double, 2> normal, double shock_speed,
                   const PhysParams& params);

}  // namespace swlbm
