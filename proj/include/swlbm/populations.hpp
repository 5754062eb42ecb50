#pragma once

#include <array>

#include "swlbm/physics.hpp"

namespace swlbm {

/// D1Q3Q2 cell: f over velocities (0, +lambda, -lambda), g over (+lambda, -lambda).
struct Cell1D {
  std::array<double, 3> f{};
  std::array<double, 2> g{};

  double rho() const { return f[0] + f[1] + f[2]; }
  double q() const { return g[0] + g[1]; }
  MacroState1D macro() const { return {rho(), q()}; }
};

/// D2Q5Q4Q4 cell: f over (v0..v4) = (0, +x, +y, -x, -y); gx, gy over (v1..v4).
struct Cell2D {
  std::array<double, 5> f{};
  std::array<double, 4> gx{};
  std::array<double, 4> gy{};

  double rho() const { return f[0] + f[1] + f[2] + f[3] + f[4]; }
  double qx() const { return gx[0] + gx[1] + gx[2] + gx[3]; }
  double qy() const { return gy[0] + gy[1] + gy[2] + gy[3]; }
  MacroState2D macro() const { return {rho(), qx(), qy()}; }
};

}  // namespace swlbm
