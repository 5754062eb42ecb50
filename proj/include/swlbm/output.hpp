#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "swlbm/metrics.hpp"
#include "swlbm/physics.hpp"

namespace swlbm {

/// Comma-separated table: `x,rho,u,p` in 1D, `x,y,rho,u,v,p` (row-major, x fastest) in 2D.
/// Values carry 17 significant digits. Solid cells are written as zeros.
void write_csv(const FieldSnapshot& field, const PhysParams& params, const std::filesystem::path& path);

/// Legacy ASCII VTK structured points (2D only): scalars `rho`, `pressure`, vector `velocity`.
void write_vtk(const FieldSnapshot& field, const PhysParams& params, const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

/// Reads a numeric table written by write_csv. Throws std::runtime_error naming the path on failure.
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace swlbm
