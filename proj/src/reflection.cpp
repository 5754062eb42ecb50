#include "swlbm/reflection.hpp"

#include <cmath>

namespace swlbm {

ReflectionStates ReflectionStates::published() {
  return {{1.0, 1.59497132403753, 0.0},
          {1.17150636388320, 1.47822089880855, -0.116750425228984},
          {1.38196199044604, 1.33228286727232, 0.0}};
}

double ReflectionStates::reflected_slope() const {
  // Tangent (1, m): (u_t - u_r) + m (v_t - v_r) = 0.
  return (right.u - top.u) / (top.v - right.v);
}

std::array<double, 2> reflected_front_normal(const ReflectionStates& states) {
  const double m = states.reflected_slope();
  const double norm = std::hypot(1.0, m);
  return {m / norm, -1.0 / norm};
}

Primitive2D reflection_exact(double x, double y, const ReflectionStates& states) {
  if (x + y < 1.0) return states.left;
  if (y > states.reflected_slope() * (x - 1.0)) return states.top;
  return states.right;
}

double rh_residual(const Primitive2D& a, const Primitive2D& b, std::array<double, 2> normal, double shock_speed,
                   const PhysParams& params) {
  const MacroState2D ua = a.conserved();
  const MacroState2D ub = b.conserved();
  const auto fa = normal_flux(ua, normal[0], normal[1], params);
  const auto fb = normal_flux(ub, normal[0], normal[1], params);
  const std::array<double, 3> jump{ub.rho - ua.rho, ub.qx - ua.qx, ub.qy - ua.qy};
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double r = fb[k] - fa[k] - shock_speed * jump[k];
    sum += r * r;
  }
  return std::sqrt(sum);
}

}  // namespace swlbm
