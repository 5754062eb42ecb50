#include "swlbm/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swlbm {

namespace {

std::string number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

double cell_pressure(const FieldSnapshot& field, std::size_t k, const PhysParams& params) {
  return field.is_solid(k) || field.rho[k] <= 0.0 ? 0.0 : pressure(field.rho[k], params);
}

}  // namespace

void write_csv(const FieldSnapshot& field, const PhysParams& params, const std::filesystem::path& path) {
  std::ofstream out = open_for_writing(path);
  if (field.dim == 1) {
    out << "x,rho,u,p\n";
    for (int i = 0; i < field.nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      out << number(field.x(i)) << ',' << number(field.rho[k]) << ',' << number(field.u[k]) << ','
          << number(cell_pressure(field, k, params)) << '\n';
    }
  } else {
    out << "x,y,rho,u,v,p\n";
    for (int j = 0; j < field.ny; ++j) {
      for (int i = 0; i < field.nx; ++i) {
        const std::size_t k = field.index(i, j);
        const bool solid = field.is_solid(k);
        out << number(field.x(i)) << ',' << number(field.y(j)) << ',' << number(solid ? 0.0 : field.rho[k]) << ','
            << number(solid ? 0.0 : field.u[k]) << ',' << number(solid ? 0.0 : field.v[k]) << ','
            << number(cell_pressure(field, k, params)) << '\n';
      }
    }
  }
  finish(out, path);
}

void write_vtk(const FieldSnapshot& field, const PhysParams& params, const std::filesystem::path& path) {
  if (field.dim != 2) throw std::invalid_argument("vtk output needs a 2D field: " + path.string());
  std::ofstream out = open_for_writing(path);
  const std::size_t n = field.size();
  out << "# vtk DataFile Version 3.0\n"
      << "shallow water fields, step " << field.step << "\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << field.nx << ' ' << field.ny << " 1\n"
      << "ORIGIN " << number(field.x(0)) << ' ' << number(field.y(0)) << " 0\n"
      << "SPACING " << number(field.dx) << ' ' << number(field.dx) << " 1\n"
      << "POINT_DATA " << n << "\n";
  out << "SCALARS rho double 1\nLOOKUP_TABLE default\n";
  for (std::size_t k = 0; k < n; ++k) out << number(field.is_solid(k) ? 0.0 : field.rho[k]) << '\n';
  out << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
  for (std::size_t k = 0; k < n; ++k) out << number(cell_pressure(field, k, params)) << '\n';
  out << "VECTORS velocity double\n";
  for (std::size_t k = 0; k < n; ++k) {
    const bool solid = field.is_solid(k);
    out << number(solid ? 0.0 : field.u[k]) << ' ' << number(solid ? 0.0 : field.v[k]) << " 0\n";
  }
  finish(out, path);
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == name) return c;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": not a number: '" + cell + "'");
      }
      row.push_back(value);
    }
    if (row.size() != table.header.size()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(table.header.size()) + " columns");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace swlbm
