#include "swlbm/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swlbm/errors.hpp"

namespace swlbm {

namespace {

// Velocity jump across a wave connecting rho_k to rho.
double wave_function(double rho, double rho_k, double c_k, double kappa) {
  if (rho <= rho_k) return 2.0 * (std::sqrt(2.0 * kappa * rho) - c_k);
  return (rho - rho_k) * std::sqrt(kappa * (rho + rho_k) / (rho * rho_k));
}

}  // namespace

RiemannSolution::RiemannSolution(Primitive1D left, Primitive1D right, double rho_star, double u_star,
                                 const PhysParams& params)
    : left_(left), right_(right), rho_star_(rho_star), u_star_(u_star), kappa_(params.kappa()) {
  const double c_star = std::sqrt(2.0 * kappa_ * rho_star_);
  const double c_l = std::sqrt(2.0 * kappa_ * left_.rho);
  const double c_r = std::sqrt(2.0 * kappa_ * right_.rho);

  if (rho_star_ > left_.rho) {
    left_wave_ = WaveKind::Shock;
    left_head_ = left_tail_ = left_.u - std::sqrt(kappa_ * rho_star_ * (rho_star_ + left_.rho) / left_.rho);
  } else {
    left_wave_ = WaveKind::Rarefaction;
    left_head_ = left_.u - c_l;
    left_tail_ = u_star_ - c_star;
  }
  if (rho_star_ > right_.rho) {
    right_wave_ = WaveKind::Shock;
    right_head_ = right_tail_ = right_.u + std::sqrt(kappa_ * rho_star_ * (rho_star_ + right_.rho) / right_.rho);
  } else {
    right_wave_ = WaveKind::Rarefaction;
    right_head_ = right_.u + c_r;
    right_tail_ = u_star_ + c_star;
  }
}

Primitive1D RiemannSolution::sample(double xi) const {
  const Primitive1D star{rho_star_, u_star_};
  if (xi <= u_star_) {
    if (left_wave_ == WaveKind::Shock) return xi < left_head_ ? left_ : star;
    if (xi <= left_head_) return left_;
    if (xi >= left_tail_) return star;
    const double c_l = std::sqrt(2.0 * kappa_ * left_.rho);
    const double c = (left_.u + 2.0 * c_l - xi) / 3.0;
    return {c * c / (2.0 * kappa_), xi + c};
  }
  if (right_wave_ == WaveKind::Shock) return xi > right_head_ ? right_ : star;
  if (xi >= right_head_) return right_;
  if (xi <= right_tail_) return star;
  const double c_r = std::sqrt(2.0 * kappa_ * right_.rho);
  const double c = (xi - right_.u + 2.0 * c_r) / 3.0;
  return {c * c / (2.0 * kappa_), xi - c};
}

RiemannSolution exact_riemann(Primitive1D left, Primitive1D right, const PhysParams& params) {
  if (!params.is_shallow_water()) throw UnsupportedExponent("exact Riemann solver requires gamma = 2");
  if (!(left.rho > 0.0) || !(right.rho > 0.0)) throw DomainError("Riemann states need positive density");

  if (left.rho == right.rho && left.u == right.u) return RiemannSolution(left, right, left.rho, left.u, params);

  const double kappa = params.kappa();
  const double c_l = std::sqrt(2.0 * kappa * left.rho);
  const double c_r = std::sqrt(2.0 * kappa * right.rho);
  if (2.0 * (c_l + c_r) <= right.u - left.u) {
    throw VacuumError("Riemann data generate a dry state: 2(c_l + c_r) = " + std::to_string(2.0 * (c_l + c_r)) +
                      " <= u_r - u_l = " + std::to_string(right.u - left.u));
  }

  const auto star_function = [&](double rho) {
    return wave_function(rho, left.rho, c_l, kappa) + wave_function(rho, right.rho, c_r, kappa) + right.u - left.u;
  };

  double lo = 1e-8;
  double hi = 10.0 * std::max(left.rho, right.rho);
  while (star_function(hi) < 0.0) hi *= 2.0;
  if (star_function(lo) > 0.0) lo = 0.0;
  for (int iter = 0; iter < 400 && hi - lo > 1e-12 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (star_function(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double rho_star = 0.5 * (lo + hi);
  const double u_star = 0.5 * (left.u + right.u) +
                        0.5 * (wave_function(rho_star, right.rho, c_r, kappa) - wave_function(rho_star, left.rho, c_l, kappa));
  return RiemannSolution(left, right, rho_star, u_star, params);
}

}  // namespace swlbm
