#include "swlbm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "swlbm/errors.hpp"

namespace swlbm {

namespace {

double max_density(const FieldSnapshot& field) {
  double m = 0.0;
  for (std::size_t k = 0; k < field.size(); ++k) {
    if (!field.is_solid(k)) m = std::max(m, field.rho[k]);
  }
  return m;
}

struct Line {
  double intercept = 0.0;
  double slope = 0.0;
};

Line least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double det = n * sxx - sx * sx;
  if (xs.size() < 2 || det == 0.0) throw MetricUnavailable("line fit needs at least two distinct abscissae");
  Line line;
  line.slope = (n * sxy - sx * sy) / det;
  line.intercept = (sy - line.slope * sx) / n;
  return line;
}

}  // namespace

double l1_error(const FieldSnapshot& field, const DensitySampler& reference, int subsamples) {
  if (field.rho.size() != field.size()) throw std::invalid_argument("l1_error: field shape does not match its grid");
  if (subsamples < 1) throw std::invalid_argument("l1_error: subsamples must be positive");
  const int sy = field.dim == 1 ? 1 : subsamples;
  const double h = field.dx / subsamples;
  double sum = 0.0;
  std::size_t fluid = 0;
  for (int j = 0; j < field.ny; ++j) {
    for (int i = 0; i < field.nx; ++i) {
      const std::size_t k = field.index(i, j);
      if (field.is_solid(k)) continue;
      double avg = 0.0;
      for (int b = 0; b < sy; ++b) {
        const double y = field.dim == 1 ? 0.0 : field.y0 + j * field.dx + (b + 0.5) * h;
        for (int a = 0; a < subsamples; ++a) avg += reference(field.x0 + i * field.dx + (a + 0.5) * h, y);
      }
      avg /= static_cast<double>(subsamples) * sy;
      sum += std::abs(field.rho[k] - avg);
      ++fluid;
    }
  }
  return fluid == 0 ? 0.0 : sum / static_cast<double>(fluid);
}

double l1_difference(const FieldSnapshot& a, const FieldSnapshot& b) {
  if (a.nx != b.nx || a.ny != b.ny || a.rho.size() != b.rho.size()) {
    throw std::invalid_argument("l1_difference: fields have different shapes");
  }
  double sum = 0.0;
  std::size_t fluid = 0;
  for (std::size_t k = 0; k < a.rho.size(); ++k) {
    if (a.is_solid(k) || b.is_solid(k)) continue;
    sum += std::abs(a.rho[k] - b.rho[k]);
    ++fluid;
  }
  return fluid == 0 ? 0.0 : sum / static_cast<double>(fluid);
}

double shock_position_1d(const FieldSnapshot& field, double x_lo, double x_hi) {
  const int n = field.nx;
  int best = -1;
  double jump = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    if (field.x(i) < x_lo || field.x(i + 1) > x_hi) continue;
    const double d = std::abs(field.rho[i + 1] - field.rho[i]);
    if (d > jump) {
      jump = d;
      best = i;
    }
  }
  if (best < 0 || jump < 0.05 * max_density(field)) throw MetricUnavailable("no density jump above 5% of max rho");

  // Mid-level between the states a few cells either side of the steepest face.
  constexpr int kReach = 3;
  const int lo = std::max(0, best - kReach);
  const int hi = std::min(n - 1, best + 1 + kReach);
  const double mid = 0.5 * (field.rho[lo] + field.rho[hi]);
  double position = 0.5 * (field.x(best) + field.x(best + 1));
  double closest = 1e300;
  for (int i = lo; i < hi; ++i) {
    const double r0 = field.rho[i] - mid;
    const double r1 = field.rho[i + 1] - mid;
    if (r0 == r1 || r0 * r1 > 0.0) continue;
    const double x = field.x(i) + field.dx * r0 / (r0 - r1);
    const double face = 0.5 * (field.x(best) + field.x(best + 1));
    if (std::abs(x - face) < closest) {
      closest = std::abs(x - face);
      position = x;
    }
  }
  return position;
}

RarefactionEdges rarefaction_edges(const FieldSnapshot& field, const RiemannSolution& exact, double diaphragm) {
  if (exact.left_wave() != WaveKind::Rarefaction) throw MetricUnavailable("left wave is not a rarefaction");
  if (field.time <= 0.0) throw MetricUnavailable("rarefaction edges need t > 0");
  const double rho_l = exact.left().rho;
  const double rho_s = exact.rho_star();
  const double range = rho_l - rho_s;
  const double contact = diaphragm + exact.u_star() * field.time;

  std::vector<double> xs, cs;
  for (int i = 0; i < field.nx; ++i) {
    const double r = field.rho[i];
    if (field.x(i) >= contact) break;
    if (r > rho_s + 0.2 * range && r < rho_l - 0.2 * range) {
      xs.push_back(field.x(i));
      cs.push_back(std::sqrt(r));
    }
  }
  const Line line = least_squares(xs, cs);
  if (line.slope == 0.0) throw MetricUnavailable("flat rarefaction profile");
  return {(std::sqrt(rho_l) - line.intercept) / line.slope, (std::sqrt(rho_s) - line.intercept) / line.slope};
}

PlateauStats plateau(const FieldSnapshot& field, double x_lo, double x_hi, double target) {
  PlateauStats stats;
  for (int i = 0; i < field.nx; ++i) {
    const double x = field.x(i);
    if (x <= x_lo || x >= x_hi) continue;
    stats.mean += field.rho[i];
    stats.max_rel_deviation = std::max(stats.max_rel_deviation, std::abs(field.rho[i] - target) / target);
    ++stats.cells;
  }
  if (stats.cells == 0) throw MetricUnavailable("no cells inside the plateau interval");
  stats.mean /= stats.cells;
  return stats;
}

double reflected_shock_angle(const FieldSnapshot& field, double x_lo, double x_hi) {
  if (field.dim != 2) throw MetricUnavailable("reflected shock angle needs a 2D field");
  const double threshold = 0.05 * max_density(field);
  std::vector<double> xs, ys;
  for (int i = 0; i < field.nx; ++i) {
    const double x = field.x(i);
    if (x < x_lo || x > x_hi) continue;
    double jump = 0.0;
    int best = -1;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int j = 0; j + 1 < field.ny; ++j) {
      const std::size_t k0 = field.index(i, j);
      const std::size_t k1 = field.index(i, j + 1);
      if (field.is_solid(k0) || field.is_solid(k1)) continue;
      lo = std::min({lo, field.rho[k0], field.rho[k1]});
      hi = std::max({hi, field.rho[k0], field.rho[k1]});
      const double d = std::abs(field.rho[k1] - field.rho[k0]);
      if (d > jump) {
        jump = d;
        best = j;
      }
    }
    // A captured shock may be spread over many cells, so the column is
    // judged by the rise across it rather than by its steepest step.
    if (best < 0 || hi - lo < threshold) {
      throw MetricUnavailable("column at x = " + std::to_string(x) + " rises by less than 5% of max rho");
    }
    xs.push_back(x);
    ys.push_back(field.y(best) + 0.5 * field.dx);
  }
  const Line line = least_squares(xs, ys);
  return std::atan(line.slope) * 180.0 / std::numbers::pi;
}

BowShock bow_shock(const FieldSnapshot& field, double x_limit, double rise) {
  const auto column_mean = [&](int i) {
    double sum = 0.0;
    int count = 0;
    for (int j = 0; j < field.ny; ++j) {
      const std::size_t k = field.index(i, j);
      if (field.is_solid(k)) continue;
      sum += field.rho[k];
      ++count;
    }
    return count == 0 ? 0.0 : sum / count;
  };
  const double inflow = column_mean(0);
  if (inflow <= 0.0) throw MetricUnavailable("inflow column has no fluid");

  BowShock shock;
  bool found = false;
  for (int i = 0; i < field.nx && field.x(i) < x_limit; ++i) {
    const double ratio = column_mean(i) / inflow;
    shock.peak_ratio = std::max(shock.peak_ratio, ratio);
    if (!found && ratio >= 1.0 + rise) {
      shock.x = field.x0 + i * field.dx;
      found = true;
    }
  }
  if (!found) throw MetricUnavailable("no column ahead of the obstacle rises above the inflow density");
  return shock;
}

}  // namespace swlbm
