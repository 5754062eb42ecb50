#include "swlbm/kinetics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "swlbm/errors.hpp"

namespace swlbm {

namespace {

constexpr double kLegendreTolerance = 1e-10;
constexpr int kLegendreMaxIterations = 100;

void require_dim(int dim) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
}

int n_potentials(int dim) { return dim == 1 ? 3 : 5; }

void require_index(int dim, int j) {
  if (j < 0 || j >= n_potentials(dim)) {
    throw std::out_of_range("velocity index " + std::to_string(j) + " out of range");
  }
}

void require_shallow_water(const PhysParams& phys) {
  if (!phys.is_shallow_water()) {
    throw UnsupportedExponent("kinetic potentials are only constructed for gamma = 2");
  }
}

// Axis (index into phi) and orientation of a moving velocity.
struct Direction {
  int axis;
  double sign;
};

Direction direction_of(int dim, int j) {
  if (dim == 1) return {1, j == kPlus ? 1.0 : -1.0};
  switch (j) {
    case 1: return {1, 1.0};
    case 2: return {2, 1.0};
    case 3: return {1, -1.0};
    default: return {2, -1.0};
  }
}

}  // namespace

KineticParams::KineticParams(double a, double lambda, PhysParams phys) : a_(a), lambda_(lambda), phys_(phys) {
  if (!(a > 0.0)) throw DomainError("potential weight a must be positive");
  if (!(lambda > 0.0)) throw DomainError("lattice velocity lambda must be positive");
}

double h_star_1d(int j, const EntropyVars1D& phi, const KineticParams& kp) {
  require_shallow_water(kp.phys());
  require_index(1, j);
  const double K = kp.phys().K();
  const double a = kp.a();
  const double theta = phi.theta;
  if (j == kRest) return 0.5 * a * K * theta * theta;
  const double c2 = theta + 0.5 * phi.beta * phi.beta;
  const double sign = j == kPlus ? 1.0 : -1.0;
  return 0.5 * K * c2 * c2 * (1.0 + sign * phi.beta / kp.lambda()) - 0.25 * a * K * theta * theta;
}

double h_star_2d(int j, const EntropyVars2D& phi, const KineticParams& kp) {
  require_shallow_water(kp.phys());
  require_index(2, j);
  const double K = kp.phys().K();
  const double h0 = 0.5 * kp.a() * K * phi.theta * phi.theta;
  if (j == 0) return h0;
  const double c2 = phi.theta + 0.5 * (phi.u * phi.u + phi.v * phi.v);
  const double p = K * c2 * c2;
  const double base = 0.25 * (p - h0);
  const double lam2 = 2.0 * kp.lambda();
  switch (j) {
    case 1: return base + p * phi.u / lam2;
    case 2: return base + p * phi.v / lam2;
    case 3: return base - p * phi.u / lam2;
    default: return base - p * phi.v / lam2;
  }
}

// Every moving potential has the form w (p - h0*) + sign p phi_axis / (2 lambda)
// with w = 1/2 in 1D and 1/4 in 2D.
PotentialDerivatives potential_derivatives(int dim, int j, std::span<const double> phi, const KineticParams& kp) {
  require_dim(dim);
  require_index(dim, j);
  require_shallow_water(kp.phys());
  const int n = dim + 1;
  if (static_cast<int>(phi.size()) < n) throw std::invalid_argument("phi has too few components");

  const double K = kp.phys().K();
  const double aK = kp.a() * K;
  const double theta = phi[0];

  PotentialDerivatives h0;
  h0.value = 0.5 * aK * theta * theta;
  h0.grad[0] = aK * theta;
  h0.hess[0][0] = aK;
  if (j == kRest) return h0;

  double c2 = theta;
  for (int k = 1; k < n; ++k) c2 += 0.5 * phi[k] * phi[k];
  const double p = K * c2 * c2;
  std::array<double, 3> dp{};
  std::array<std::array<double, 3>, 3> d2p{};
  dp[0] = 2.0 * K * c2;
  d2p[0][0] = 2.0 * K;
  for (int k = 1; k < n; ++k) {
    dp[k] = 2.0 * K * c2 * phi[k];
    d2p[0][k] = d2p[k][0] = 2.0 * K * phi[k];
    for (int l = 1; l < n; ++l) d2p[k][l] = 2.0 * K * (phi[k] * phi[l] + (k == l ? c2 : 0.0));
  }

  const double weight = dim == 1 ? 0.5 : 0.25;
  const auto [axis, sign] = direction_of(dim, j);
  const double w = phi[axis];
  const double c = sign / (2.0 * kp.lambda());

  PotentialDerivatives out;
  out.value = weight * (p - h0.value) + c * p * w;
  for (int k = 0; k < n; ++k) {
    out.grad[k] = weight * (dp[k] - h0.grad[k]) + c * (dp[k] * w + (k == axis ? p : 0.0));
    for (int l = 0; l < n; ++l) {
      out.hess[k][l] = weight * (d2p[k][l] - h0.hess[k][l]) +
                       c * (d2p[k][l] * w + (l == axis ? dp[k] : 0.0) + (k == axis ? dp[l] : 0.0));
    }
  }
  return out;
}

Equilibrium1D equilibrium_1d(const MacroState1D& state, const KineticParams& kp) {
  require_shallow_water(kp.phys());
  const PhysParams& phys = kp.phys();
  const double rho = state.rho;
  const double u = state.u();
  const double p = pressure(rho, phys);
  const double theta = entropy_vars(state, phys).theta;
  const double aKtheta = kp.a() * phys.K() * theta;
  const double lam = kp.lambda();

  Equilibrium1D eq;
  eq.f[kRest] = aKtheta;
  eq.f[kPlus] = 0.5 * rho * (1.0 + u / lam) - 0.5 * aKtheta;
  eq.f[kMinus] = 0.5 * rho * (1.0 - u / lam) - 0.5 * aKtheta;
  eq.g[0] = 0.5 * rho * u * (1.0 + u / lam) + p / (2.0 * lam);
  eq.g[1] = 0.5 * rho * u * (1.0 - u / lam) - p / (2.0 * lam);
  return eq;
}

Equilibrium2D equilibrium_2d(const MacroState2D& state, const KineticParams& kp) {
  require_shallow_water(kp.phys());
  const PhysParams& phys = kp.phys();
  const double rho = state.rho;
  const double u = state.u();
  const double v = state.v();
  const double p = pressure(rho, phys);
  const double theta = entropy_vars(state, phys).theta;
  const double aKtheta = kp.a() * phys.K() * theta;
  const double two_lam = 2.0 * kp.lambda();

  const double rest_share = 0.25 * (rho - aKtheta);
  const double xx = (rho * u * u + p) / two_lam;
  const double yy = (rho * v * v + p) / two_lam;
  const double xy = rho * u * v / two_lam;

  Equilibrium2D eq;
  eq.f = {aKtheta, rest_share + rho * u / two_lam, rest_share + rho * v / two_lam, rest_share - rho * u / two_lam,
          rest_share - rho * v / two_lam};
  const double qx4 = 0.25 * rho * u;
  const double qy4 = 0.25 * rho * v;
  eq.gx = {qx4 + xx, qx4 + xy, qx4 - xx, qx4 - xy};
  eq.gy = {qy4 + xy, qy4 + yy, qy4 - xy, qy4 - yy};
  return eq;
}

ConvexityReport hessian_convexity_check(std::span<const double> phi, const KineticParams& kp, int dim) {
  require_dim(dim);
  const int n = dim + 1;
  if (static_cast<int>(phi.size()) < n) throw std::invalid_argument("phi has too few components");

  double norm = 0.0;
  for (int k = 0; k < n; ++k) norm += phi[k] * phi[k];
  const double h = 1e-5 * (std::sqrt(norm) + 1.0);

  ConvexityReport report;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n_potentials(dim); ++j) {
    auto eval = [&](std::array<double, 3> x) {
      return dim == 1 ? h_star_1d(j, {x[0], x[1]}, kp) : h_star_2d(j, {x[0], x[1], x[2]}, kp);
    };
    std::array<double, 3> x0{};
    std::copy_n(phi.begin(), n, x0.begin());
    const double f0 = eval(x0);

    Eigen::MatrixXd hess(n, n);
    for (int k = 0; k < n; ++k) {
      auto xp = x0, xm = x0;
      xp[k] += h;
      xm[k] -= h;
      hess(k, k) = (eval(xp) - 2.0 * f0 + eval(xm)) / (h * h);
      for (int l = k + 1; l < n; ++l) {
        auto pp = x0, pm = x0, mp = x0, mm = x0;
        pp[k] += h, pp[l] += h;
        pm[k] += h, pm[l] -= h;
        mp[k] -= h, mp[l] += h;
        mm[k] -= h, mm[l] -= h;
        hess(k, l) = hess(l, k) = (eval(pp) - eval(pm) - eval(mp) + eval(mm)) / (4.0 * h * h);
      }
    }
    const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hess, Eigen::EigenvaluesOnly).eigenvalues()(0);
    const double tol = 1e-6 * (1.0 + hess.cwiseAbs().maxCoeff());
    if (min_eig < report.min_eigenvalue) {
      report.min_eigenvalue = min_eig;
      report.worst_potential = j;
    }
    if (min_eig < -tol) report.convex = false;
  }
  return report;
}

LegendreResult legendre_value(int dim, int j, std::span<const double> populations, const KineticParams& kp,
                              std::span<const double> guess) {
  require_dim(dim);
  require_index(dim, j);
  const int n = j == kRest ? 1 : dim + 1;
  if (static_cast<int>(populations.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " populations for velocity " + std::to_string(j));
  }
  if (static_cast<int>(guess.size()) < n) throw std::invalid_argument("initial guess has too few components");

  std::array<double, 3> x{};
  std::copy_n(guess.begin(), n, x.begin());

  auto objective = [&](const std::array<double, 3>& phi, const PotentialDerivatives& d) {
    double dot = 0.0;
    for (int k = 0; k < n; ++k) dot += phi[k] * populations[k];
    return dot - d.value;
  };
  auto as_vector = [&](const std::array<double, 3>& a) {
    return std::vector<double>(a.begin(), a.begin() + n);
  };

  PotentialDerivatives d = potential_derivatives(dim, j, x, kp);
  double value = objective(x, d);
  for (int iter = 0; iter <= kLegendreMaxIterations; ++iter) {
    Eigen::VectorXd residual(n);
    for (int k = 0; k < n; ++k) residual(k) = populations[k] - d.grad[k];
    if (residual.norm() < kLegendreTolerance) {
      return {value, x, n, iter};
    }
    if (iter == kLegendreMaxIterations) break;

    Eigen::MatrixXd hess(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) hess(k, l) = d.hess[k][l];
    Eigen::LLT<Eigen::MatrixXd> llt(hess);
    if (llt.info() != Eigen::Success) {
      throw ConvergenceError("potential " + std::to_string(j) + " is not strictly convex at the current iterate",
                             as_vector(x));
    }
    const Eigen::VectorXd step = llt.solve(residual);

    // Backtrack until the concave objective stops decreasing (up to round-off).
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
      std::array<double, 3> trial = x;
      for (int k = 0; k < n; ++k) trial[k] += t * step(k);
      const PotentialDerivatives dt = potential_derivatives(dim, j, trial, kp);
      const double trial_value = objective(trial, dt);
      if (trial_value >= value - 1e-13 * (1.0 + std::abs(value))) {
        x = trial;
        d = dt;
        value = trial_value;
        accepted = true;
        break;
      }
    }
    if (!accepted) throw ConvergenceError("line search failed in Legendre transform", as_vector(x));
  }
  throw ConvergenceError("Legendre transform did not converge in " + std::to_string(kLegendreMaxIterations) +
                             " iterations",
                         as_vector(x));
}

MicroscopicEntropy microscopic_entropy_total(std::span<const Cell1D> cells, const KineticParams& kp) {
  MicroscopicEntropy total;
  for (const Cell1D& cell : cells) {
    try {
      const EntropyVars1D phi = entropy_vars(cell.macro(), kp.phys());
      const std::array<double, 2> guess{phi.theta, phi.beta};
      double node = legendre_value(1, kRest, std::array{cell.f[kRest]}, kp, guess).value;
      node += legendre_value(1, kPlus, std::array{cell.f[kPlus], cell.g[0]}, kp, guess).value;
      node += legendre_value(1, kMinus, std::array{cell.f[kMinus], cell.g[1]}, kp, guess).value;
      total.H += node;
    } catch (const std::exception&) {
      ++total.failed_nodes;
    }
  }
  return total;
}

MicroscopicEntropy microscopic_entropy_total(std::span<const Cell2D> cells, const KineticParams& kp) {
  MicroscopicEntropy total;
  for (const Cell2D& cell : cells) {
    try {
      const EntropyVars2D phi = entropy_vars(cell.macro(), kp.phys());
      const std::array<double, 3> guess{phi.theta, phi.u, phi.v};
      double node = legendre_value(2, 0, std::array{cell.f[0]}, kp, guess).value;
      for (int j = 1; j <= 4; ++j) {
        node += legendre_value(2, j, std::array{cell.f[j], cell.gx[j - 1], cell.gy[j - 1]}, kp, guess).value;
      }
      total.H += node;
    } catch (const std::exception&) {
      ++total.failed_nodes;
    }
  }
  return total;
}

}  // namespace swlbm
