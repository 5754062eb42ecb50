#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "swlbm/errors.hpp"
#include "swlbm/physics.hpp"

using namespace swlbm;

namespace {

const PhysParams kShallow;  // gamma 2, rho0 1, p0 0.5

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(PhysParams, DerivedConstants) {
  EXPECT_DOUBLE_EQ(kShallow.c0(), 1.0);
  EXPECT_DOUBLE_EQ(kShallow.K(), 0.5);
  EXPECT_DOUBLE_EQ(kShallow.K() * std::pow(kShallow.c0(), 4), kShallow.p0());
  EXPECT_TRUE(kShallow.is_shallow_water());

  const PhysParams other(2.0, 2.0, 3.0);
  EXPECT_NEAR(other.K(), other.rho0() / (2.0 * other.c0() * other.c0()), 1e-15);
}

TEST(PhysParams, RejectsNonPhysicalConstants) {
  EXPECT_THROW(PhysParams(2.0, 0.0, 0.5), DomainError);
  EXPECT_THROW(PhysParams(2.0, 1.0, -1.0), DomainError);
  EXPECT_THROW(PhysParams(1.0, 1.0, 0.5), DomainError);
}

TEST(Pressure, Examples) {
  EXPECT_DOUBLE_EQ(pressure(kShallow.rho0(), kShallow), kShallow.p0());
  EXPECT_DOUBLE_EQ(pressure(2.0, kShallow), 2.0);
  EXPECT_DOUBLE_EQ(sound_speed(1.0, kShallow), 1.0);
  // c^2 = rho under this normalization.
  EXPECT_NEAR(sound_speed(2.5, kShallow), std::sqrt(2.5), 1e-15);
  EXPECT_THROW(pressure(0.0, kShallow), DomainError);
  EXPECT_THROW(sound_speed(-1.0, kShallow), DomainError);
}

TEST(EntropyPair, Examples) {
  const auto rest = entropy_pair(MacroState1D{1.0, 0.0}, kShallow);
  EXPECT_DOUBLE_EQ(rest.eta, kShallow.p0() / (kShallow.gamma() - 1.0));
  EXPECT_DOUBLE_EQ(rest.zeta, 0.0);

  const auto moving = entropy_pair(MacroState1D{1.0, 1.0}, kShallow);
  EXPECT_DOUBLE_EQ(moving.eta, 1.0);

  const auto flat = entropy_pair(MacroState2D{1.0, 1.0, 0.0}, kShallow);
  EXPECT_DOUBLE_EQ(flat.zeta[0], flat.eta + 0.5);
  EXPECT_DOUBLE_EQ(flat.zeta[1], 0.0);
}

TEST(EntropyVars, ExamplesAndInverse) {
  const auto phi = entropy_vars(MacroState1D{1.0, 0.0}, kShallow);
  EXPECT_DOUBLE_EQ(phi.theta, 1.0);
  EXPECT_DOUBLE_EQ(phi.beta, 0.0);

  const auto back = state_from_entropy_vars(EntropyVars1D{1.0, 0.0}, kShallow);
  EXPECT_DOUBLE_EQ(back.rho, 1.0);
  EXPECT_DOUBLE_EQ(back.q, 0.0);

  EXPECT_THROW(state_from_entropy_vars(EntropyVars1D{-1.0, 0.5}, kShallow), DomainError);
  EXPECT_THROW(state_from_entropy_vars(EntropyVars1D{1.0, 0.0}, PhysParams(1.4, 1.0, 1.0)), UnsupportedExponent);
}

TEST(EntropyVars, RoundTripOnRandomStates) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rho_dist(0.1, 10.0), u_dist(-5.0, 5.0);
  for (int k = 0; k < 2000; ++k) {
    const double rho = rho_dist(rng), u = u_dist(rng), v = u_dist(rng);
    const MacroState1D s1{rho, rho * u};
    const auto r1 = state_from_entropy_vars(entropy_vars(s1, kShallow), kShallow);
    EXPECT_LE(std::abs(r1.rho - s1.rho) / s1.rho, 1e-13);
    EXPECT_LE(std::abs(r1.q - s1.q) / std::max(std::abs(s1.q), s1.rho), 1e-13);

    const auto s2 = MacroState2D::from_primitive(rho, u, v);
    const auto r2 = state_from_entropy_vars(entropy_vars(s2, kShallow), kShallow);
    EXPECT_LE(std::abs(r2.rho - s2.rho) / s2.rho, 1e-13);
    EXPECT_LE(std::abs(r2.qx - s2.qx) / std::max(std::abs(s2.qx), s2.rho), 1e-13);
    EXPECT_LE(std::abs(r2.qy - s2.qy) / std::max(std::abs(s2.qy), s2.rho), 1e-13);
  }
}

TEST(DualEntropy, Examples) {
  const auto at_c0 = dual_entropy(EntropyVars1D{kShallow.c0() * kShallow.c0(), 0.0}, kShallow);
  EXPECT_DOUBLE_EQ(at_c0.eta_star, kShallow.p0());

  // K = rho0^2 / (4 p0) for gamma = 2, so rho0 = p0 = 1 gives K = 0.25.
  const PhysParams quarter(2.0, 1.0, 1.0);
  ASSERT_DOUBLE_EQ(quarter.K(), 0.25);
  const auto d = dual_entropy(EntropyVars1D{2.0, 0.0}, quarter);
  EXPECT_DOUBLE_EQ(d.eta_star, 1.0);
  EXPECT_DOUBLE_EQ(d.zeta_star, 0.0);

  EXPECT_THROW(dual_entropy(EntropyVars1D{1.0, 0.0}, PhysParams(1.4, 1.0, 1.0)), UnsupportedExponent);
}

TEST(DualEntropy, FenchelIdentityOnRandomStates) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rho_dist(0.1, 10.0), u_dist(-5.0, 5.0);
  for (int k = 0; k < 2000; ++k) {
    const double rho = rho_dist(rng), u = u_dist(rng), v = u_dist(rng);
    const MacroState1D s1{rho, rho * u};
    const auto phi1 = entropy_vars(s1, kShallow);
    const double lhs1 = dual_entropy(phi1, kShallow).eta_star + entropy_pair(s1, kShallow).eta;
    const double rhs1 = phi1.theta * s1.rho + phi1.beta * s1.q;
    EXPECT_LE(std::abs(lhs1 - rhs1) / std::abs(rhs1), 1e-12);

    const auto s2 = MacroState2D::from_primitive(rho, u, v);
    const auto phi2 = entropy_vars(s2, kShallow);
    const double lhs2 = dual_entropy(phi2, kShallow).eta_star + entropy_pair(s2, kShallow).eta;
    const double rhs2 = phi2.theta * s2.rho + phi2.u * s2.qx + phi2.v * s2.qy;
    EXPECT_LE(std::abs(lhs2 - rhs2) / std::abs(rhs2), 1e-12);
  }
}

TEST(Flux, Examples) {
  const auto rest = flux(MacroState1D{1.0, 0.0}, kShallow);
  EXPECT_DOUBLE_EQ(rest.mass, 0.0);
  EXPECT_DOUBLE_EQ(rest.momentum, 0.5);

  const auto fast = flux(MacroState1D{1.0, 3.0}, kShallow);
  EXPECT_DOUBLE_EQ(fast.mass, 3.0);
  EXPECT_DOUBLE_EQ(fast.momentum, 9.5);

  const Flux2D f = flux(MacroState2D{1.0, 1.0, 2.0}, kShallow);
  EXPECT_DOUBLE_EQ(f[1][1], 2.0);
  EXPECT_DOUBLE_EQ(f[2][0], 2.0);
  EXPECT_DOUBLE_EQ(f[1][0], 1.5);
  EXPECT_DOUBLE_EQ(f[2][1], 4.5);
}

TEST(Flux, NormalFluxProjectsTheTable) {
  const MacroState2D s{1.3, 0.4, -0.7};
  const Flux2D f = flux(s, kShallow);
  const double nx = 0.6, ny = 0.8;
  const auto fn = normal_flux(s, nx, ny, kShallow);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(fn[k], f[k][0] * nx + f[k][1] * ny, 1e-15);
}

// d zeta = phi . dF along random directions, with O(h) error that shrinks under refinement.
TEST(EntropyCompatibility, FiniteDifferenceRefinement) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> rho_dist(0.5, 3.0), u_dist(-2.0, 2.0), d_dist(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const MacroState1D w{rho_dist(rng), u_dist(rng)};
    const double dr = d_dist(rng), dq = d_dist(rng);
    const auto phi = entropy_vars(w, kShallow);
    const auto mismatch = [&](double h) {
      const MacroState1D wh{w.rho + h * dr, w.q + h * dq};
      const double dzeta = (entropy_pair(wh, kShallow).zeta - entropy_pair(w, kShallow).zeta) / h;
      const Flux1D f0 = flux(w, kShallow), f1 = flux(wh, kShallow);
      const double dflux = phi.theta * (f1.mass - f0.mass) / h + phi.beta * (f1.momentum - f0.momentum) / h;
      return std::abs(dzeta - dflux);
    };
    const double e1 = mismatch(1e-3), e2 = mismatch(1e-4);
    EXPECT_LT(e2, 0.2 * e1 + 1e-9);
    EXPECT_LT(rel(e2, 0.0), 1e-2);
  }
}
