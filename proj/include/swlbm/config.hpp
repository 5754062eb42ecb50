#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "swlbm/lattice1d.hpp"
#include "swlbm/physics.hpp"
#include "swlbm/reflection.hpp"
#include "swlbm/riemann.hpp"

namespace swlbm {

enum class CaseKind { Riemann1D, Reflection2D, Emery2D, Uniform, Custom };
enum class SolverKind { Lbm, Godunov, Exact };
enum class OutputFormat { Csv, Vtk };

struct SchemeConfig {
  double lambda = 8.0;
  double a = 0.15;
  /// One rate broadcast to every non-conserved moment, or one per moment.
  std::vector<double> s{1.8};
  double cfl = 0.45;
};

struct MeshConfig {
  int n = 80;
  int nx = 0;
  int ny = 0;
};

struct TimeConfig {
  double t_end = 0.25;
  long output_every = 0;
  double steady_tol = 0.0;
};

struct RiemannPayload {
  Primitive1D left{2.0, 0.0};
  Primitive1D right{0.5, 0.0};
  double diaphragm = 0.5;
  double length = 1.0;
  /// Boundary treatment of both ends: inflow holds the end states.
  BoundaryKind bc = BoundaryKind::Inflow;
};

/// Domain [0, 1.75] x [0, 1].
struct ReflectionPayload {
  ReflectionStates states = ReflectionStates::published();
};

struct EmeryPayload {
  Primitive2D inflow{1.0, 3.0, 0.0};
  double length = 3.0;
  double height = 1.0;
  double step_x = 0.6;
  double step_height = 0.2;
};

struct UniformPayload {
  int dim = 1;
  Primitive2D state{1.0, 0.0, 0.0};
  double length = 1.0;
  double height = 1.0;
};

/// Axis-aligned box [x0, x1] x [y0, y1].
struct Box {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  bool contains(double x, double y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
};

struct Region {
  Box box;
  Primitive2D state;
};

struct SideSpec {
  BoundaryKind kind = BoundaryKind::Periodic;
  Primitive2D state;
};

/// Piecewise-constant initial data on a rectangle; later regions override earlier ones.
struct CustomPayload {
  int dim = 1;
  double length = 1.0;
  double height = 1.0;
  Primitive2D background{1.0, 0.0, 0.0};
  std::vector<Region> regions;
  std::vector<Box> obstacles;
  /// left, right, bottom, top
  std::array<SideSpec, 4> bc;
};

struct OutputConfig {
  std::string directory = "output";
  OutputFormat format = OutputFormat::Csv;
};

struct CaseConfig {
  std::string name;
  CaseKind kind = CaseKind::Riemann1D;
  SolverKind solver = SolverKind::Lbm;
  PhysParams phys;
  SchemeConfig scheme;
  MeshConfig mesh;
  TimeConfig time;
  RiemannPayload riemann;
  ReflectionPayload reflection;
  EmeryPayload emery;
  UniformPayload uniform;
  CustomPayload custom;
  OutputConfig output;
  int threads = 1;

  int dim() const;
};

/// Parses and validates a JSON case description. Throws ConfigError naming the key path.
CaseConfig parse_config(const std::string& text);

/// JSON text that parse_config maps back to `config`.
std::string dump_config(const CaseConfig& config);

std::string to_string(CaseKind kind);
std::string to_string(SolverKind kind);
std::string to_string(BoundaryKind kind);

/// Physical length and height of the case domain (height is 1 for 1D cases).
std::array<double, 2> domain_extent(const CaseConfig& config);

/// Rates expanded to the scheme's non-conserved moment count (3 in 1D, 10 in 2D).
std::vector<double> expand_rates(const std::vector<double>& s, int dim);

}  // namespace swlbm
