#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swlbm/config.hpp"
#include "swlbm/lattice1d.hpp"
#include "swlbm/lattice2d.hpp"
#include "swlbm/metrics.hpp"

namespace swlbm {

struct BuiltinCase {
  std::string name;
  std::string description;
  CaseConfig config;
};

/// Preloaded experiments: shock tube, stationary shock reflection on three
/// meshes, forward-facing step on three meshes at t = 0.5 and t = 4, and
/// uniform-state sanity cases.
const std::vector<BuiltinCase>& builtin_cases();

std::optional<CaseConfig> find_builtin(const std::string& name);

/// Grid, boundaries and initial data of a 1D case.
struct Problem1D {
  Grid1D grid;
  Boundaries1D bc;
  std::vector<MacroState1D> initial;
};

struct Problem2D {
  Grid2D grid;
  Boundaries2D bc;
  std::vector<MacroState2D> initial;
};

Problem1D make_problem_1d(const CaseConfig& config);
Problem2D make_problem_2d(const CaseConfig& config);

/// Exact density at `time` for cases that have one (shock tube, reflection, uniform).
std::optional<DensitySampler> exact_density(const CaseConfig& config, double time);

FieldSnapshot to_snapshot(const Grid1D& grid, const std::vector<MacroState1D>& states, long step, double time);
FieldSnapshot to_snapshot(const Grid2D& grid, const std::vector<MacroState2D>& states, long step, double time);

}  // namespace swlbm
