// Acceptance checks for the ten release criteria. Prints one PASS/FAIL line
// per criterion and exits non-zero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swlbm/cases.hpp"
#include "swlbm/kinetics.hpp"
#include "swlbm/lattice1d.hpp"
#include "swlbm/lattice2d.hpp"
#include "swlbm/metrics.hpp"
#include "swlbm/reflection.hpp"
#include "swlbm/runner.hpp"

namespace fs = std::filesystem;
using namespace swlbm;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + buf);
    pass = pass && ok;
  }
};

const PhysParams kShallow;
constexpr int kSamples = 10000;

double max_abs(std::initializer_list<double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double central_difference(const std::function<double(double)>& f, double x) {
  const double h = 1e-5 * (std::abs(x) + 1.0);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// theta in [0.1, 10], |beta| <= 0.3 lambda (Euclidean norm in 2D).
struct PhiSampler {
  std::mt19937_64 rng;
  double lambda;
  std::uniform_real_distribution<double> theta{0.1, 10.0};
  std::uniform_real_distribution<double> unit{-1.0, 1.0};

  PhiSampler(std::uint64_t seed, double lam) : rng(seed), lambda(lam) {}

  EntropyVars1D one() { return {theta(rng), 0.3 * lambda * unit(rng)}; }

  EntropyVars2D two() {
    const double t = theta(rng);
    const double r = 0.3 * lambda * std::sqrt(std::abs(unit(rng)));
    const double angle = std::numbers::pi * unit(rng);
    return {t, r * std::cos(angle), r * std::sin(angle)};
  }
};

Outcome potential_identities() {
  Outcome out;
  for (const KineticParams& kp : {KineticParams(0.15, 8.0, kShallow), KineticParams(0.05, 80.0, kShallow)}) {
    PhiSampler sampler(101, kp.lambda());
    double worst1 = 0.0, worst2 = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const EntropyVars1D p1 = sampler.one();
      const auto d1 = dual_entropy(p1, kShallow);
      const double h0 = h_star_1d(kRest, p1, kp), hp = h_star_1d(kPlus, p1, kp), hm = h_star_1d(kMinus, p1, kp);
      worst1 = std::max(worst1, std::abs(h0 + hp + hm - d1.eta_star) / std::abs(d1.eta_star));
      worst1 = std::max(worst1, std::abs(kp.lambda() * (hp - hm) - d1.zeta_star) / max_abs({d1.zeta_star, d1.eta_star}));

      const EntropyVars2D p2 = sampler.two();
      const auto d2 = dual_entropy(p2, kShallow);
      std::array<double, 5> h{};
      for (int j = 0; j < 5; ++j) h[j] = h_star_2d(j, p2, kp);
      const double sum = h[0] + h[1] + h[2] + h[3] + h[4];
      const double zx = kp.lambda() * (h[1] - h[3]);
      const double zy = kp.lambda() * (h[2] - h[4]);
      const double scale = max_abs({d2.eta_star, d2.zeta_star[0], d2.zeta_star[1]});
      worst2 = std::max(worst2, std::abs(sum - d2.eta_star) / std::abs(d2.eta_star));
      worst2 = std::max(worst2, std::abs(zx - d2.zeta_star[0]) / scale);
      worst2 = std::max(worst2, std::abs(zy - d2.zeta_star[1]) / scale);
    }
    out.require(worst1 <= 1e-12, "1D a=%.2f lambda=%g: max relative residual %.2e (<= 1e-12)", kp.a(), kp.lambda(), worst1);
    out.require(worst2 <= 1e-12, "2D a=%.2f lambda=%g: max relative residual %.2e (<= 1e-12)", kp.a(), kp.lambda(), worst2);
  }
  return out;
}

Outcome gradient_equilibria() {
  Outcome out;
  for (const KineticParams& kp : {KineticParams(0.15, 8.0, kShallow), KineticParams(0.05, 80.0, kShallow)}) {
    const double lam = kp.lambda();
    const double aK = kp.a() * kShallow.K();
    PhiSampler sampler(202, lam);
    double fd1 = 0.0, fd2 = 0.0, mom1 = 0.0, mom2 = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      // 1D: f_j = dh_j/dtheta, g_j = dh_j/dbeta.
      const EntropyVars1D p1 = sampler.one();
      const MacroState1D s1 = state_from_entropy_vars(p1, kShallow);
      const auto e1 = equilibrium_1d(s1, kp);
      for (int j = 0; j < 3; ++j) {
        const double df = central_difference([&](double t) { return h_star_1d(j, {t, p1.beta}, kp); }, p1.theta);
        double dg = 0.0, g = 0.0;
        if (j != kRest) {
          g = e1.g[j - 1];
          dg = central_difference([&](double b) { return h_star_1d(j, {p1.theta, b}, kp); }, p1.beta);
        }
        const double scale = max_abs({e1.f[j], g});
        fd1 = std::max(fd1, max_abs({df - e1.f[j], dg - g}) / scale);
      }
      const Moments1D m1 = moments_from_populations({e1.f, e1.g}, lam);
      const double u = s1.q / s1.rho;
      const double p = pressure(s1.rho, kShallow);
      const double scale1 = max_abs({s1.rho, s1.q, s1.rho * u * u + p});
      mom1 = std::max(mom1, max_abs({m1.rho - s1.rho, m1.J_rho - s1.q, m1.q - s1.q, m1.J_q - (s1.rho * u * u + p)}) / scale1);
      mom1 = std::max(mom1, std::abs(m1.eps_rho - lam * lam * (s1.rho - 3.0 * aK * p1.theta)) / (lam * lam * s1.rho));

      // 2D: f_j = dh_j/dtheta, (gx_j, gy_j) = grad_u h_j.
      const EntropyVars2D p2 = sampler.two();
      const MacroState2D s2 = state_from_entropy_vars(p2, kShallow);
      const auto e2 = equilibrium_2d(s2, kp);
      for (int j = 0; j < 5; ++j) {
        const double df = central_difference([&](double t) { return h_star_2d(j, {t, p2.u, p2.v}, kp); }, p2.theta);
        double gx = 0.0, gy = 0.0, dgx = 0.0, dgy = 0.0;
        if (j != 0) {
          gx = e2.gx[j - 1];
          gy = e2.gy[j - 1];
          dgx = central_difference([&](double x) { return h_star_2d(j, {p2.theta, x, p2.v}, kp); }, p2.u);
          dgy = central_difference([&](double y) { return h_star_2d(j, {p2.theta, p2.u, y}, kp); }, p2.v);
        }
        const double scale = max_abs({e2.f[j], gx, gy});
        fd2 = std::max(fd2, max_abs({df - e2.f[j], dgx - gx, dgy - gy}) / scale);
      }
      const Moments2D m2 = moments_from_populations({e2.f, e2.gx, e2.gy}, lam);
      const double vx = s2.qx / s2.rho, vy = s2.qy / s2.rho;
      const double p2p = pressure(s2.rho, kShallow);
      const double fxx = s2.rho * vx * vx + p2p, fyy = s2.rho * vy * vy + p2p, fxy = s2.rho * vx * vy;
      const double scale2 = max_abs({s2.rho, s2.qx, s2.qy, fxx, fyy, fxy});
      mom2 = std::max(mom2, max_abs({m2.rho - s2.rho, m2.Jx_rho - s2.qx, m2.Jy_rho - s2.qy, m2.XX_rho, m2.qx - s2.qx,
                                     m2.fxx - fxx, m2.fxy - fxy, m2.XX_u, m2.qy - s2.qy, m2.fyx - fxy, m2.fyy - fyy,
                                     m2.XX_v}) / scale2);
      mom2 = std::max(mom2, std::abs(m2.eps_rho - (s2.rho - 5.0 * aK * p2.theta)) / s2.rho);
    }
    out.require(fd1 <= 1e-6, "1D lambda=%g: closed form vs FD gradient %.2e (<= 1e-6)", lam, fd1);
    out.require(fd2 <= 1e-6, "2D lambda=%g: closed form vs FD gradient %.2e (<= 1e-6)", lam, fd2);
    out.require(mom1 <= 1e-12, "1D lambda=%g: equilibrium moment table %.2e (<= 1e-12)", lam, mom1);
    out.require(mom2 <= 1e-12, "2D lambda=%g: equilibrium moment table %.2e (<= 1e-12)", lam, mom2);
  }
  return out;
}

// A few random low Fourier modes with decaying amplitudes.
std::vector<double> random_field(std::uint64_t seed, int nx, int ny, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  struct Mode {
    int kx, ky;
    double amp, phase;
  };
  std::vector<Mode> modes;
  for (int kx = 1; kx <= 3; ++kx) {
    for (int ky = 0; ky <= 2; ++ky) modes.push_back({kx, ky, d(rng) / (kx + ky), std::numbers::pi * d(rng)});
  }
  std::vector<double> out(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double x = (i + 0.5) / nx, y = (j + 0.5) / ny;
      double v = 0.0;
      for (const Mode& m : modes) v += m.amp * std::sin(2.0 * std::numbers::pi * (m.kx * x + m.ky * y) + m.phase);
      out[static_cast<std::size_t>(j) * nx + i] = amplitude * v;
    }
  }
  return out;
}

double max_drift(const std::vector<double>& series, double scale) {
  double worst = 0.0;
  for (double v : series) worst = std::max(worst, std::abs(v - series.front()) / scale);
  return worst;
}

Outcome conservation() {
  Outcome out;
  const KineticParams kp(0.15, 8.0, kShallow);

  {
    const int n = 128;
    const auto drho = random_field(11, n, 1, 0.1);
    const auto du = random_field(12, n, 1, 0.2);
    Lbm1DSetup setup;
    setup.grid = {n, 1.0 / n, kp.lambda(), 0.0};
    setup.kp = kp;
    for (int i = 0; i < n; ++i) setup.initial.push_back({1.0 + drho[i], (1.0 + drho[i]) * du[i]});
    setup.n_steps = 1000;
    const auto traj = run_1d(setup);
    const double scale = traj.diagnostics.mass.front();
    const double dm = max_drift(traj.diagnostics.mass, scale);
    const double dq = max_drift(traj.diagnostics.momentum, scale);
    out.require(dm <= 1e-12 && dq <= 1e-12, "1D periodic, 1000 steps: mass drift %.2e, momentum drift %.2e", dm, dq);
  }

  const int n2 = 48;
  Grid2D grid;
  grid.nx = grid.ny = n2;
  grid.dx = 1.0 / n2;
  grid.lambda = kp.lambda();
  const auto drho = random_field(21, n2, n2, 0.1);
  const auto du = random_field(22, n2, n2, 0.2);
  const auto dv = random_field(23, n2, n2, 0.2);
  std::vector<MacroState2D> initial;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    initial.push_back(MacroState2D::from_primitive(1.0 + drho[c], du[c], dv[c]));
  }
  {
    Lbm2DSetup setup;
    setup.grid = grid;
    setup.kp = kp;
    setup.bc.left.kind = setup.bc.right.kind = setup.bc.bottom.kind = setup.bc.top.kind = BoundaryKind::Wall;
    setup.initial = initial;
    setup.n_steps = 1000;
    const auto traj = run_2d(setup);
    const double dm = max_drift(traj.diagnostics.mass, traj.diagnostics.mass.front());
    out.require(dm <= 1e-12, "2D closed box, 1000 steps: mass drift %.2e", dm);
  }
  {
    // Walls exchange momentum with the fluid, so momentum is checked on a periodic box.
    Lbm2DSetup setup;
    setup.grid = grid;
    setup.kp = kp;
    setup.initial = initial;
    setup.n_steps = 1000;
    const auto traj = run_2d(setup);
    const auto& d = traj.diagnostics;
    const double scale = d.mass.front();
    const double dm = max_drift(d.mass, scale);
    const double dq = std::max(max_drift(d.momentum_x, scale), max_drift(d.momentum_y, scale));
    out.require(dm <= 1e-12 && dq <= 1e-12, "2D periodic box, 1000 steps: mass drift %.2e, momentum drift %.2e", dm, dq);
  }

  double worst = 0.0;
  for (double s : {0.5, 1.0, 1.8, 2.0}) {
    Lbm1DSetup setup;
    setup.grid = {32, 1.0 / 32, kp.lambda(), 0.0};
    setup.kp = kp;
    setup.s = {s, s, s};
    setup.initial.assign(32, {1.7, -0.85});
    setup.n_steps = 200;
    const Trajectory1D t1 = run_1d(setup);
    for (const auto& st : t1.snapshots.back().state) {
      worst = std::max(worst, max_abs({st.rho - 1.7, st.q + 0.85}));
    }
    Lbm2DSetup s2;
    s2.grid = grid;
    s2.grid.nx = s2.grid.ny = 16;
    s2.kp = kp;
    s2.s.fill(s);
    const auto u0 = MacroState2D::from_primitive(1.3, 0.4, -0.6);
    s2.initial.assign(s2.grid.size(), u0);
    s2.n_steps = 200;
    const Trajectory2D t2 = run_2d(s2);
    for (const auto& st : t2.snapshots.back().state) {
      worst = std::max(worst, max_abs({st.rho - u0.rho, st.qx - u0.qx, st.qy - u0.qy}));
    }
  }
  out.require(worst <= 1e-13, "uniform states, s in {0.5, 1, 1.8, 2}, 200 steps: max deviation %.2e (<= 1e-13)", worst);
  return out;
}

Outcome h_theorem() {
  Outcome out;
  const KineticParams kp(0.15, 8.0, kShallow);
  const int n = 100;
  const auto drho = random_field(31, n, 1, 0.15);
  const auto du = random_field(32, n, 1, 0.3);
  Lbm1DSetup setup;
  setup.grid = {n, 1.0 / n, kp.lambda(), 0.0};
  setup.kp = kp;
  setup.s = {1.0, 1.0, 1.0};
  for (int i = 0; i < n; ++i) setup.initial.push_back({1.0 + drho[i], (1.0 + drho[i]) * du[i]});
  setup.n_steps = 200;
  setup.track_entropy = true;
  const auto traj = run_1d(setup);
  const auto& H = traj.diagnostics.entropy;
  double worst_rise = -1e300;
  std::size_t failures = 0;
  for (std::size_t k = 1; k < H.size(); ++k) worst_rise = std::max(worst_rise, H[k] - H[k - 1]);
  for (std::size_t f : traj.diagnostics.entropy_failures) failures += f;
  out.require(H.size() == 201 && failures == 0, "%zu entropy samples, %zu failed Legendre transforms", H.size(), failures);
  out.require(worst_rise <= 1e-10, "largest per-step change of H: %.3e (<= +1e-10); H %.6f -> %.6f", worst_rise,
              H.front(), H.back());
  return out;
}

Outcome shock_tube(RunReport& lbm) {
  Outcome out;
  CaseConfig cfg = *find_builtin("riemann1d");
  lbm = run_case(cfg, {std::nullopt, false});
  if (lbm.aborted) {
    out.require(false, "run aborted: %s", lbm.abort_reason.c_str());
    return out;
  }
  const double dx = 1.0 / cfg.mesh.n;
  const auto& m = lbm.metrics;
  auto get = [&](const char* key) { return m.count(key) ? m.at(key) : std::nan(""); };
  const double shock = get("shock_position") - get("shock_position_exact");
  out.require(std::abs(shock) <= 2.0 * dx, "shock at %.4f, exact %.4f: offset %+.2f dx (limit 2)", get("shock_position"),
              get("shock_position_exact"), shock / dx);
  out.require(get("plateau_max_deviation") <= 0.03, "star plateau mean %.4f, max deviation %.2f%% from rho* = %.4f (limit 3%%)",
              get("plateau_mean"), 100.0 * get("plateau_max_deviation"), get("rho_star_exact"));
  const double head = get("rarefaction_head") - get("rarefaction_head_exact");
  const double tail = get("rarefaction_tail") - get("rarefaction_tail_exact");
  out.require(std::abs(head) <= 3.0 * dx, "rarefaction head %.4f, exact %.4f: offset %+.2f dx (limit 3)",
              get("rarefaction_head"), get("rarefaction_head_exact"), head / dx);
  out.require(std::abs(tail) <= 3.0 * dx, "rarefaction tail %.4f, exact %.4f: offset %+.2f dx (limit 3)",
              get("rarefaction_tail"), get("rarefaction_tail_exact"), tail / dx);
  out.notes.push_back("info L1(rho) vs exact " + std::to_string(get("l1_rho")));
  return out;
}

Outcome rankine_hugoniot() {
  Outcome out;
  const auto st = ReflectionStates::published();
  const double r = 1.0 / std::sqrt(2.0);
  const double incident = rh_residual(st.left, st.top, {r, r}, 0.0, kShallow);
  const double reflected = rh_residual(st.top, st.right, reflected_front_normal(st), 0.0, kShallow);
  out.require(incident <= 1e-4, "incident front (left, top): residual %.2e (<= 1e-4)", incident);
  out.require(reflected <= 1e-4, "reflected front (top, right): residual %.2e (<= 1e-4)", reflected);
  return out;
}

Outcome reflection(const fs::path& dir, RunReport& lbm) {
  Outcome out;
  CaseConfig cfg = *find_builtin("reflection2d-140x80");
  lbm = run_case(cfg, {dir / "run1", true});
  cfg.solver = SolverKind::Godunov;
  const RunReport god = run_case(cfg, {std::nullopt, false});
  if (lbm.aborted || god.aborted) {
    out.require(false, "aborted: %s %s", lbm.abort_reason.c_str(), god.abort_reason.c_str());
    return out;
  }
  out.require(lbm.reached_steady, "LBM steady after %ld steps (t = %.3f), last change %.2e (< 1e-8)", lbm.steps,
              lbm.final_time, lbm.last_change);
  out.require(god.reached_steady, "Godunov steady after %ld steps (t = %.3f), last change %.2e (< 1e-8)", god.steps,
              god.final_time, god.last_change);
  const double target = std::atan(4.0 / 3.0) * 180.0 / std::numbers::pi;
  const double angle = lbm.metrics.count("reflected_angle_deg") ? lbm.metrics.at("reflected_angle_deg") : std::nan("");
  out.require(std::abs(angle - target) <= 3.0, "reflected front angle %.2f deg vs %.2f deg (limit 3)", angle, target);
  const FieldSnapshot& a = lbm.snapshots.back();
  const FieldSnapshot& b = god.snapshots.back();
  double mean = 0.0;
  for (double r : a.rho) mean += r;
  mean /= static_cast<double>(a.rho.size());
  const double diff = l1_difference(a, b);
  out.require(diff <= 0.05 * mean, "L1(rho) LBM vs Godunov %.4e = %.2f%% of mean rho %.4f (limit 5%%)", diff,
              100.0 * diff / mean, mean);
  char info[160];
  std::snprintf(info, sizeof info, "info runtimes LBM %.1f s, Godunov %.1f s; angle of the exact field %.2f deg",
                lbm.wall_seconds, god.wall_seconds, lbm.metrics.at("reflected_angle_exact_deg"));
  out.notes.push_back(info);
  return out;
}

Outcome godunov_convergence() {
  Outcome out;
  std::vector<double> errors;
  for (int n : {80, 160, 320}) {
    CaseConfig cfg = *find_builtin("riemann1d");
    cfg.solver = SolverKind::Godunov;
    cfg.mesh.n = n;
    const RunReport r = run_case(cfg, {std::nullopt, false});
    errors.push_back(r.aborted ? std::nan("") : r.metrics.at("l1_rho"));
  }
  const double o1 = std::log2(errors[0] / errors[1]);
  const double o2 = std::log2(errors[1] / errors[2]);
  out.require(errors[1] < errors[0] && errors[2] < errors[1], "L1(rho) at 80/160/320 cells: %.4e, %.4e, %.4e",
              errors[0], errors[1], errors[2]);
  out.require(std::min(o1, o2) >= 0.6, "observed orders %.3f, %.3f (>= 0.6)", o1, o2);
  return out;
}

Outcome emery() {
  Outcome out;
  const CaseConfig cfg = *find_builtin("emery2d-120x40-t4");
  const RunReport r = run_case(cfg, {std::nullopt, false});
  if (r.aborted) {
    out.require(false, "aborted: %s", r.abort_reason.c_str());
    return out;
  }
  const FieldSnapshot& f = r.snapshots.back();
  bool finite = true;
  double min_rho = 1e300;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.is_solid(k)) continue;
    finite = finite && std::isfinite(f.rho[k]) && std::isfinite(f.u[k]) && std::isfinite(f.v[k]);
    min_rho = std::min(min_rho, f.rho[k]);
  }
  out.require(std::abs(r.final_time - 4.0) < 1e-9 && finite && min_rho > 0.0 && r.min_rho > 0.0,
              "reached t = %.4f in %ld steps (%.1f s); min rho over the run %.4f, finite fields", r.final_time, r.steps,
              r.wall_seconds, r.min_rho);
  const bool found = r.metrics.count("bow_shock_x") != 0;
  const double x = found ? r.metrics.at("bow_shock_x") : std::nan("");
  const double ratio = found ? r.metrics.at("bow_shock_peak_ratio") : std::nan("");
  out.require(found && x < cfg.emery.step_x && ratio >= 1.2,
              "bow shock: first column with a >= 20%% density rise at x = %.4f (< %.2f), peak column ratio %.3f",
              x, cfg.emery.step_x, ratio);
  return out;
}

std::string file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool same_outputs(const RunReport& a, const RunReport& b, std::string& detail) {
  if (a.manifest.size() != b.manifest.size() || a.manifest.empty()) {
    detail = "manifest sizes differ";
    return false;
  }
  for (std::size_t k = 0; k < a.manifest.size(); ++k) {
    if (a.manifest[k].filename() != b.manifest[k].filename()) {
      detail = "file names differ";
      return false;
    }
    if (file_bytes(a.manifest[k]) != file_bytes(b.manifest[k])) {
      detail = a.manifest[k].filename().string() + " differs";
      return false;
    }
  }
  detail = std::to_string(a.manifest.size()) + " file(s) identical";
  return true;
}

Outcome determinism(const fs::path& dir, const RunReport& reflection_first) {
  Outcome out;
  const int threads = 4;
  std::string detail;

  CaseConfig tube = *find_builtin("riemann1d");
  tube.time.output_every = 20;
  const RunReport t1 = run_case(tube, {dir / "tube1", true});
  const RunReport t2 = run_case(tube, {dir / "tube2", true});
  tube.threads = threads;
  const RunReport tn = run_case(tube, {dir / "tubeN", true});
  bool ok = same_outputs(t1, t2, detail);
  out.require(ok, "shock tube, two executions: %s", detail.c_str());
  ok = same_outputs(t1, tn, detail);
  out.require(ok, "shock tube, 1 vs %d threads: %s", threads, detail.c_str());

  CaseConfig refl = *find_builtin("reflection2d-140x80");
  const RunReport r2 = run_case(refl, {dir / "run2", true});
  refl.threads = threads;
  const RunReport rn = run_case(refl, {dir / "runN", true});
  ok = same_outputs(reflection_first, r2, detail);
  out.require(ok, "reflection, two executions: %s", detail.c_str());
  ok = same_outputs(reflection_first, rn, detail);
  out.require(ok, "reflection, 1 vs %d threads: %s", threads, detail.c_str());
  return out;
}

void report(int id, const char* title, const Outcome& o, int& failures) {
  std::printf("criterion %2d  %-4s  %s\n", id, o.pass ? "PASS" : "FAIL", title);
  for (const std::string& n : o.notes) std::printf("              %s\n", n.c_str());
  std::fflush(stdout);
  failures += o.pass ? 0 : 1;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "swlbm_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  int failures = 0;
  report(1, "potential identities", potential_identities(), failures);
  report(2, "gradient equilibria and moment tables", gradient_equilibria(), failures);
  report(3, "conservation and uniform fixed points", conservation(), failures);
  report(4, "discrete H-theorem at s = 1", h_theorem(), failures);
  RunReport tube;
  report(5, "shock tube vs exact solution", shock_tube(tube), failures);
  report(6, "jump conditions of the reflection states", rankine_hugoniot(), failures);
  RunReport reflection_run;
  report(7, "stationary shock reflection, 140x80", reflection(dir, reflection_run), failures);
  report(8, "Godunov convergence on the shock tube", godunov_convergence(), failures);
  report(9, "forward-facing step smoke test, 120x40", emery(), failures);
  report(10, "bitwise determinism", determinism(dir, reflection_run), failures);

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
