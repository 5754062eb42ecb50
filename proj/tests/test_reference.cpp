#include <gtest/gtest.h>

#include <cmath>

#include "swlbm/errors.hpp"
#include "swlbm/godunov.hpp"
#include "swlbm/reflection.hpp"
#include "swlbm/riemann.hpp"

using namespace swlbm;

namespace {

const PhysParams kShallow;

// Mass and momentum jump conditions across a front moving at `speed`.
double rh_1d(const Primitive1D& a, const Primitive1D& b, double speed) {
  const double mass = b.rho * b.u - a.rho * a.u - speed * (b.rho - a.rho);
  const double mom = (b.rho * b.u * b.u + 0.5 * b.rho * b.rho) - (a.rho * a.u * a.u + 0.5 * a.rho * a.rho) -
                     speed * (b.rho * b.u - a.rho * a.u);
  return std::hypot(mass, mom);
}

}  // namespace

TEST(ExactRiemann, IdenticalStatesGiveNoWaves) {
  const auto sol = exact_riemann({1.3, 0.4}, {1.3, 0.4}, kShallow);
  EXPECT_NEAR(sol.rho_star(), 1.3, 1e-11);
  EXPECT_NEAR(sol.u_star(), 0.4, 1e-11);
  for (double xi : {-3.0, -0.5, 0.0, 0.7, 3.0}) EXPECT_NEAR(sol.sample(xi).rho, 1.3, 1e-11);
}

TEST(ExactRiemann, ShockTubeStructure) {
  const auto sol = exact_riemann({2.0, 0.0}, {0.5, 0.0}, kShallow);
  EXPECT_EQ(sol.left_wave(), WaveKind::Rarefaction);
  EXPECT_EQ(sol.right_wave(), WaveKind::Shock);
  EXPECT_NEAR(sol.rho_star(), 1.10349385383702, 1e-10);
  EXPECT_NEAR(sol.u_star(), 0.727480810499095, 1e-10);
  EXPECT_NEAR(sol.left_head(), -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(sol.left_tail(), sol.u_star() - std::sqrt(sol.rho_star()), 1e-12);
  EXPECT_DOUBLE_EQ(sol.right_head(), sol.right_tail());
  EXPECT_GT(sol.right_head(), sol.u_star());
  EXPECT_DOUBLE_EQ(sol.sample(-10.0).rho, 2.0);
  EXPECT_DOUBLE_EQ(sol.sample(10.0).rho, 0.5);
}

// A single right-moving shock built from the jump conditions: rho 2 behind, rho 1 ahead at rest.
TEST(ExactRiemann, ReproducesAConstructedShock) {
  const double u_behind = std::sqrt(0.75);
  const double speed = 2.0 * u_behind;
  const auto sol = exact_riemann({2.0, u_behind}, {1.0, 0.0}, kShallow);
  EXPECT_NEAR(sol.rho_star(), 2.0, 1e-10);
  EXPECT_NEAR(sol.u_star(), u_behind, 1e-10);
  EXPECT_EQ(sol.right_wave(), WaveKind::Shock);
  EXPECT_NEAR(sol.right_head(), speed, 1e-9);
}

TEST(ExactRiemann, ShocksSatisfyJumpConditions) {
  const Primitive1D cases[][2] = {{{2.0, 0.0}, {0.5, 0.0}}, {{1.0, 1.0}, {1.0, -1.0}}, {{0.7, 2.0}, {3.0, 0.1}},
                                  {{1.5, -0.3}, {1.0, -2.0}}};
  for (const auto& c : cases) {
    const auto sol = exact_riemann(c[0], c[1], kShallow);
    const Primitive1D star{sol.rho_star(), sol.u_star()};
    if (sol.left_wave() == WaveKind::Shock) EXPECT_LE(rh_1d(c[0], star, sol.left_head()), 1e-9);
    if (sol.right_wave() == WaveKind::Shock) EXPECT_LE(rh_1d(star, c[1], sol.right_head()), 1e-9);
  }
}

TEST(ExactRiemann, RarefactionsKeepTheirInvariant) {
  const auto sol = exact_riemann({2.0, 0.0}, {0.5, 0.0}, kShallow);
  const double invariant = 0.0 + 2.0 * std::sqrt(2.0);
  for (int k = 0; k <= 10; ++k) {
    const double xi = sol.left_head() + (sol.left_tail() - sol.left_head()) * k / 10.0;
    const Primitive1D s = sol.sample(xi);
    EXPECT_NEAR(s.u + 2.0 * std::sqrt(s.rho), invariant, 1e-10);
  }

  const auto two = exact_riemann({1.0, -0.5}, {1.0, 0.5}, kShallow);
  EXPECT_EQ(two.left_wave(), WaveKind::Rarefaction);
  EXPECT_EQ(two.right_wave(), WaveKind::Rarefaction);
  const Primitive1D inside = two.sample(0.5 * (two.right_tail() + two.right_head()));
  EXPECT_NEAR(inside.u - 2.0 * std::sqrt(inside.rho), 0.5 - 2.0, 1e-10);
}

TEST(ExactRiemann, MirrorSymmetry) {
  const auto a = exact_riemann({2.0, 0.3}, {0.5, -0.1}, kShallow);
  const auto b = exact_riemann({0.5, 0.1}, {2.0, -0.3}, kShallow);
  EXPECT_NEAR(a.rho_star(), b.rho_star(), 1e-11);
  EXPECT_NEAR(a.u_star(), -b.u_star(), 1e-11);
  for (double xi : {-1.2, -0.4, 0.1, 0.9}) {
    EXPECT_NEAR(a.sample(xi).rho, b.sample(-xi).rho, 1e-10);
    EXPECT_NEAR(a.sample(xi).u, -b.sample(-xi).u, 1e-10);
  }
}

TEST(ExactRiemann, ErrorsOnVacuumAndBadInput) {
  EXPECT_THROW(exact_riemann({1.0, -3.0}, {1.0, 3.0}, kShallow), VacuumError);
  EXPECT_THROW(exact_riemann({0.0, 0.0}, {1.0, 0.0}, kShallow), DomainError);
  EXPECT_THROW(exact_riemann({1.0, 0.0}, {1.0, 0.0}, PhysParams(1.4, 1.0, 1.0)), UnsupportedExponent);
}

TEST(Godunov1D, UniformStateIsUnchanged) {
  std::vector<MacroState1D> s(20, {1.4, 0.7});
  Boundaries1D bc;
  const auto run = run_godunov_1d(s, 0.05, bc, kShallow, 0.9, 0.5);
  for (const auto& st : run.snapshots.back().state) {
    EXPECT_NEAR(st.rho, 1.4, 1e-14);
    EXPECT_NEAR(st.q, 0.7, 1e-14);
  }
  EXPECT_NEAR(run.snapshots.back().time, 0.5, 1e-14);
}

TEST(Godunov1D, StationaryShockIsPreserved) {
  // m^2 = rho_l rho_r (rho_l + rho_r) / 2 makes the jump stationary.
  const double m = std::sqrt(3.0);
  std::vector<MacroState1D> s;
  for (int i = 0; i < 40; ++i) s.push_back(i < 20 ? MacroState1D{1.0, m} : MacroState1D{2.0, m});
  Boundaries1D bc;
  bc.left = {BoundaryKind::Inflow, {1.0, m}};
  bc.right = {BoundaryKind::Outflow, {}};
  const auto run = run_godunov_1d(s, 0.025, bc, kShallow, 0.9, 1.0);
  // The interface star state is bisected to relative width 1e-12, which bounds the drift.
  const auto& out = run.snapshots.back().state;
  for (int i = 0; i < 40; ++i) {
    EXPECT_NEAR(out[i].rho, i < 20 ? 1.0 : 2.0, 1e-10);
    EXPECT_NEAR(out[i].q, m, 1e-10);
  }
}

TEST(Godunov1D, ConservationMatchesBoundaryInflow) {
  std::vector<MacroState1D> s;
  for (int i = 0; i < 50; ++i) s.push_back(i < 25 ? MacroState1D{2.0, 0.0} : MacroState1D{0.5, 0.0});
  Boundaries1D bc;
  bc.left = {BoundaryKind::Inflow, {2.0, 0.5}};
  bc.right = {BoundaryKind::Outflow, {}};
  const auto run = run_godunov_1d(s, 0.02, bc, kShallow, 0.9, 0.4);
  double mass_in = 0.0, mom_in = 0.0;
  for (std::size_t k = 1; k < run.mass.size(); ++k) {
    mass_in += run.inflow[k].mass;
    mom_in += run.inflow[k].momentum;
    EXPECT_NEAR(run.mass[k] - run.mass[0], mass_in, 1e-12);
    EXPECT_NEAR(run.momentum[k] - run.momentum[0], mom_in, 1e-12);
  }
}

TEST(Godunov1D, PeriodicConservesExactly) {
  std::vector<MacroState1D> s;
  for (int i = 0; i < 32; ++i) s.push_back({1.0 + 0.3 * std::sin(i * 0.4), 0.2});
  const auto run = run_godunov_1d(s, 1.0 / 32, Boundaries1D{}, kShallow, 0.9, 1.0);
  for (double m : run.mass) EXPECT_NEAR(m, run.mass[0], 1e-13);
  for (double q : run.momentum) EXPECT_NEAR(q, run.momentum[0], 1e-13);
}

TEST(Godunov2D, UniformStateInAChannel) {
  Grid2D g;
  g.nx = 10;
  g.ny = 6;
  g.dx = 0.1;
  g.lambda = 8.0;
  const auto state = MacroState2D::from_primitive(1.0, 1.5, 0.0);
  Boundaries2D bc;
  bc.left = {BoundaryKind::Inflow, state};
  bc.right.kind = BoundaryKind::Outflow;
  bc.bottom.kind = bc.top.kind = BoundaryKind::Wall;
  const auto run = run_godunov_2d(std::vector<MacroState2D>(g.size(), state), g, bc, kShallow, 0.45, 0.5);
  for (const auto& s : run.snapshots.back().state) {
    EXPECT_NEAR(s.rho, 1.0, 1e-13);
    EXPECT_NEAR(s.qx, 1.5, 1e-13);
    EXPECT_NEAR(s.qy, 0.0, 1e-13);
  }
}

TEST(Reflection, RegionsOfTheExactField) {
  const auto st = ReflectionStates::published();
  EXPECT_NEAR(st.reflected_slope(), 1.25, 1e-6);
  const auto a = reflection_exact(0.1, 0.1, st);
  const auto b = reflection_exact(1.0, 0.9, st);
  const auto c = reflection_exact(1.7, 0.1, st);
  EXPECT_DOUBLE_EQ(a.rho, 1.0);
  EXPECT_DOUBLE_EQ(b.rho, st.top.rho);
  EXPECT_DOUBLE_EQ(c.rho, st.right.rho);
}

TEST(Reflection, StatesSatisfyStationaryJumpConditions) {
  const auto st = ReflectionStates::published();
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LE(rh_residual(st.left, st.top, {r, r}, 0.0, kShallow), 1e-9);
  EXPECT_LE(rh_residual(st.top, st.right, reflected_front_normal(st), 0.0, kShallow), 1e-9);
  // Swapping the sides of a stationary front leaves it a solution.
  EXPECT_LE(rh_residual(st.top, st.left, {r, r}, 0.0, kShallow), 1e-9);
  // Pairing states that are not joined by a front gives a large residual.
  EXPECT_GT(rh_residual(st.left, st.right, {r, r}, 0.0, kShallow), 1e-2);
}
