#pragma once

#include "swlbm/physics.hpp"

namespace swlbm {

struct Primitive1D {
  double rho = 0.0;
  double u = 0.0;
};

enum class WaveKind { Shock, Rarefaction };

/**
 * @brief Self-similar solution of the gamma = 2 shallow-water Riemann problem.
 *
 * Rarefactions keep u + 2c (left) or u - 2c (right) constant; shocks satisfy
 * the Hugoniot relation for p = kappa rho^2. For a shock, head and tail speeds
 * coincide with the shock speed.
 */
class RiemannSolution {
 public:
  RiemannSolution() = default;
  RiemannSolution(Primitive1D left, Primitive1D right, double rho_star, double u_star, const PhysParams& params);

  Primitive1D sample(double xi) const;

  double rho_star() const { return rho_star_; }
  double u_star() const { return u_star_; }
  WaveKind left_wave() const { return left_wave_; }
  WaveKind right_wave() const { return right_wave_; }

  /// Outer and inner edge speeds of each wave.
  double left_head() const { return left_head_; }
  double left_tail() const { return left_tail_; }
  double right_head() const { return right_head_; }
  double right_tail() const { return right_tail_; }

  const Primitive1D& left() const { return left_; }
  const Primitive1D& right() const { return right_; }

 private:
  Primitive1D left_{};
  Primitive1D right_{};
  double rho_star_ = 0.0;
  double u_star_ = 0.0;
  double kappa_ = 0.5;
  WaveKind left_wave_ = WaveKind::Rarefaction;
  WaveKind right_wave_ = WaveKind::Rarefaction;
  double left_head_ = 0.0;
  double left_tail_ = 0.0;
  double right_head_ = 0.0;
  double right_tail_ = 0.0;
};

/// Star state by bisection on [1e-8, 10 max(rho_l, rho_r)] (the upper end is
/// doubled if it does not bracket), stopped at relative width 1e-12.
/// Throws VacuumError when 2 (c_l + c_r) <= u_r - u_l.
RiemannSolution exact_riemann(Primitive1D left, Primitive1D right, const PhysParams& params);

}  // namespace swlbm
