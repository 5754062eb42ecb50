#include "swlbm/physics.hpp"

#include <cmath>
#include <string>

#include "swlbm/errors.hpp"

namespace swlbm {

namespace {

void require_positive_density(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("density must be positive and finite, got " + std::to_string(rho));
  }
}

void require_shallow_water(const PhysParams& params, const char* what) {
  if (!params.is_shallow_water()) {
    throw UnsupportedExponent(std::string(what) + " has a closed form only for gamma = 2, got gamma = " +
                              std::to_string(params.gamma()));
  }
}

}  // namespace

PhysParams::PhysParams(double gamma, double rho0, double p0) : gamma_(gamma), rho0_(rho0), p0_(p0) {
  if (!(rho0 > 0.0)) throw DomainError("rho0 must be positive");
  if (!(p0 > 0.0)) throw DomainError("p0 must be positive");
  if (!(gamma > 1.0)) throw DomainError("gamma must exceed 1");
  c0_ = std::sqrt(gamma * p0 / rho0);
  K_ = p0 / (c0_ * c0_ * c0_ * c0_);
  kappa_ = p0 / std::pow(rho0, gamma);
}

double pressure(double rho, const PhysParams& params) {
  require_positive_density(rho);
  if (params.is_shallow_water()) return params.kappa() * rho * rho;
  return params.kappa() * std::pow(rho, params.gamma());
}

double sound_speed(double rho, const PhysParams& params) {
  return std::sqrt(params.gamma() * pressure(rho, params) / rho);
}

EntropyPair1D entropy_pair(const MacroState1D& state, const PhysParams& params) {
  const double p = pressure(state.rho, params);
  const double u = state.u();
  const double eta = 0.5 * state.rho * u * u + p / (params.gamma() - 1.0);
  return {eta, (eta + p) * u};
}

EntropyPair2D entropy_pair(const MacroState2D& state, const PhysParams& params) {
  const double p = pressure(state.rho, params);
  const double u = state.u();
  const double v = state.v();
  const double eta = 0.5 * state.rho * (u * u + v * v) + p / (params.gamma() - 1.0);
  return {eta, {(eta + p) * u, (eta + p) * v}};
}

EntropyVars1D entropy_vars(const MacroState1D& state, const PhysParams& params) {
  const double c = sound_speed(state.rho, params);
  const double u = state.u();
  return {c * c / (params.gamma() - 1.0) - 0.5 * u * u, u};
}

EntropyVars2D entropy_vars(const MacroState2D& state, const PhysParams& params) {
  const double c = sound_speed(state.rho, params);
  const double u = state.u();
  const double v = state.v();
  return {c * c / (params.gamma() - 1.0) - 0.5 * (u * u + v * v), u, v};
}

MacroState1D state_from_entropy_vars(const EntropyVars1D& phi, const PhysParams& params) {
  require_shallow_water(params, "state_from_entropy_vars");
  const double c2 = phi.theta + 0.5 * phi.beta * phi.beta;
  if (!(c2 > 0.0)) throw DomainError("entropy variables outside the convexity domain (theta + beta^2/2 <= 0)");
  const double rho = 2.0 * params.K() * c2;
  return {rho, rho * phi.beta};
}

MacroState2D state_from_entropy_vars(const EntropyVars2D& phi, const PhysParams& params) {
  require_shallow_water(params, "state_from_entropy_vars");
  const double c2 = phi.theta + 0.5 * (phi.u * phi.u + phi.v * phi.v);
  if (!(c2 > 0.0)) throw DomainError("entropy variables outside the convexity domain (theta + |u|^2/2 <= 0)");
  const double rho = 2.0 * params.K() * c2;
  return {rho, rho * phi.u, rho * phi.v};
}

DualEntropy1D dual_entropy(const EntropyVars1D& phi, const PhysParams& params) {
  require_shallow_water(params, "dual_entropy");
  const double c2 = phi.theta + 0.5 * phi.beta * phi.beta;
  if (!(c2 > 0.0)) throw DomainError("entropy variables outside the convexity domain");
  const double eta_star = params.K() * c2 * c2;
  return {eta_star, eta_star * phi.beta};
}

DualEntropy2D dual_entropy(const EntropyVars2D& phi, const PhysParams& params) {
  require_shallow_water(params, "dual_entropy");
  const double c2 = phi.theta + 0.5 * (phi.u * phi.u + phi.v * phi.v);
  if (!(c2 > 0.0)) throw DomainError("entropy variables outside the convexity domain");
  const double eta_star = params.K() * c2 * c2;
  return {eta_star, {eta_star * phi.u, eta_star * phi.v}};
}

Flux1D flux(const MacroState1D& state, const PhysParams& params) {
  const double p = pressure(state.rho, params);
  return {state.q, state.q * state.q / state.rho + p};
}

Flux2D flux(const MacroState2D& state, const PhysParams& params) {
  const double p = pressure(state.rho, params);
  const double u = state.u();
  const double v = state.v();
  const double ruv = state.rho * u * v;
  return {{{state.qx, state.qy}, {state.qx * u + p, ruv}, {ruv, state.qy * v + p}}};
}

std::array<double, 3> normal_flux(const MacroState2D& state, double nx, double ny, const PhysParams& params) {
  const double p = pressure(state.rho, params);
  const double un = state.u() * nx + state.v() * ny;
  return {state.rho * un, state.qx * un + p * nx, state.qy * un + p * ny};
}

}  // namespace swlbm
