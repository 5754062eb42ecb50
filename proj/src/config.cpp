#include "swlbm/config.hpp"

#include <json.hpp>
#include <cmath>
#include <set>

#include "swlbm/errors.hpp"

namespace swlbm {

using nlohmann::json;

namespace {

// A JSON object together with its key path, rejecting keys nobody asked for.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) throw ConfigError(display(), "expected an object");
  }

  ~Node() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, _] : value_.items()) {
      if (!seen_.count(key)) throw ConfigError(child_path(key), "unknown key");
    }
  }

  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  bool has(const std::string& key) const { return value_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return value_.at(key);
  }

  Node child(const std::string& key) {
    seen_.insert(key);
    return Node(value_.at(key), child_path(key));
  }

  std::string child_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number()) throw ConfigError(child_path(key), "expected a number");
    return v.get<double>();
  }

  double required_number(const std::string& key) {
    if (!has(key)) throw ConfigError(child_path(key), "missing required field");
    return number(key, 0.0);
  }

  long integer(const std::string& key, long fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_integer()) throw ConfigError(child_path(key), "expected an integer");
    return v.get<long>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError(child_path(key), "expected a string");
    return v.get<std::string>();
  }

 private:
  std::string display() const { return path_.empty() ? "<root>" : path_; }

  const json& value_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

Primitive2D read_state(Node& parent, const std::string& key, Primitive2D fallback, bool allow_v = true) {
  if (!parent.has(key)) return fallback;
  Node node = parent.child(key);
  Primitive2D s;
  s.rho = node.required_number("rho");
  s.u = node.number("u", 0.0);
  s.v = allow_v ? node.number("v", 0.0) : 0.0;
  require(s.rho > 0.0, node.child_path("rho"), "density must be positive");
  return s;
}

BoundaryKind parse_boundary(const std::string& text, const std::string& key) {
  if (text == "periodic") return BoundaryKind::Periodic;
  if (text == "wall") return BoundaryKind::Wall;
  if (text == "inflow" || text == "dirichlet") return BoundaryKind::Inflow;
  if (text == "outflow") return BoundaryKind::Outflow;
  throw ConfigError(key, "unknown boundary kind '" + text + "'");
}

Box read_box(const json& value, const std::string& key) {
  require(value.is_array() && value.size() == 4, key, "expected [x0, x1, y0, y1]");
  for (const auto& v : value) require(v.is_number(), key, "expected numbers");
  Box b{value[0].get<double>(), value[1].get<double>(), value[2].get<double>(), value[3].get<double>()};
  require(b.x1 >= b.x0 && b.y1 >= b.y0, key, "box bounds must be ordered");
  return b;
}

json state_json(const Primitive2D& s) { return {{"rho", s.rho}, {"u", s.u}, {"v", s.v}}; }

}  // namespace

int CaseConfig::dim() const {
  switch (kind) {
    case CaseKind::Riemann1D: return 1;
    case CaseKind::Reflection2D:
    case CaseKind::Emery2D: return 2;
    case CaseKind::Uniform: return uniform.dim;
    case CaseKind::Custom: return custom.dim;
  }
  return 1;
}

std::array<double, 2> domain_extent(const CaseConfig& cfg) {
  switch (cfg.kind) {
    case CaseKind::Riemann1D: return {cfg.riemann.length, 1.0};
    case CaseKind::Reflection2D: return {1.75, 1.0};
    case CaseKind::Emery2D: return {cfg.emery.length, cfg.emery.height};
    case CaseKind::Uniform: return {cfg.uniform.length, cfg.uniform.dim == 1 ? 1.0 : cfg.uniform.height};
    case CaseKind::Custom: return {cfg.custom.length, cfg.custom.dim == 1 ? 1.0 : cfg.custom.height};
  }
  return {1.0, 1.0};
}

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Riemann1D: return "riemann1d";
    case CaseKind::Reflection2D: return "reflection2d";
    case CaseKind::Emery2D: return "emery2d";
    case CaseKind::Uniform: return "uniform";
    case CaseKind::Custom: return "custom";
  }
  return "?";
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Lbm: return "lbm";
    case SolverKind::Godunov: return "godunov";
    case SolverKind::Exact: return "exact";
  }
  return "?";
}

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::Wall: return "wall";
    case BoundaryKind::Inflow: return "inflow";
    case BoundaryKind::Outflow: return "outflow";
  }
  return "?";
}

std::vector<double> expand_rates(const std::vector<double>& s, int dim) {
  const std::size_t count = dim == 1 ? 3 : 10;
  if (s.size() == 1) return std::vector<double>(count, s.front());
  if (s.size() != count) {
    throw ConfigError("scheme.s", "expected 1 or " + std::to_string(count) + " relaxation rates, got " +
                                      std::to_string(s.size()));
  }
  return s;
}

CaseConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed document: ") + e.what());
  }

  CaseConfig cfg;
  Node root(doc, "");

  require(root.has("case"), "case", "missing required field");
  const std::string kind = root.string("case", "");
  if (kind == "riemann1d") {
    cfg.kind = CaseKind::Riemann1D;
  } else if (kind == "reflection2d") {
    cfg.kind = CaseKind::Reflection2D;
  } else if (kind == "emery2d") {
    cfg.kind = CaseKind::Emery2D;
  } else if (kind == "uniform") {
    cfg.kind = CaseKind::Uniform;
  } else if (kind == "custom") {
    cfg.kind = CaseKind::Custom;
  } else {
    throw ConfigError("case", "unknown case kind '" + kind + "'");
  }
  cfg.name = root.string("name", kind);

  const std::string solver = root.string("solver", "lbm");
  if (solver == "lbm") {
    cfg.solver = SolverKind::Lbm;
  } else if (solver == "godunov") {
    cfg.solver = SolverKind::Godunov;
  } else if (solver == "exact") {
    cfg.solver = SolverKind::Exact;
  } else {
    throw ConfigError("solver", "unknown solver '" + solver + "'");
  }
  cfg.threads = static_cast<int>(root.integer("threads", 1));
  require(cfg.threads >= 1, "threads", "must be at least 1");

  if (root.has("phys")) {
    Node phys = root.child("phys");
    const double gamma = phys.number("gamma", 2.0);
    const double rho0 = phys.number("rho0", 1.0);
    const double p0 = phys.number("p0", 0.5);
    require(gamma > 1.0, "phys.gamma", "must exceed 1");
    require(rho0 > 0.0, "phys.rho0", "must be positive");
    require(p0 > 0.0, "phys.p0", "must be positive");
    cfg.phys = PhysParams(gamma, rho0, p0);
  }
  require(cfg.phys.is_shallow_water(), "phys.gamma", "kinetic and exact solvers are constructed for gamma = 2 only");

  if (root.has("scheme")) {
    Node scheme = root.child("scheme");
    cfg.scheme.lambda = scheme.number("lambda", cfg.scheme.lambda);
    cfg.scheme.a = scheme.number("a", cfg.scheme.a);
    cfg.scheme.cfl = scheme.number("cfl", cfg.scheme.cfl);
    if (scheme.has("s")) {
      const json& s = scheme.raw("s");
      if (s.is_number()) {
        cfg.scheme.s = {s.get<double>()};
      } else if (s.is_array() && !s.empty()) {
        cfg.scheme.s.clear();
        for (const auto& v : s) {
          require(v.is_number(), "scheme.s", "expected numbers");
          cfg.scheme.s.push_back(v.get<double>());
        }
      } else {
        throw ConfigError("scheme.s", "expected a number or a non-empty array");
      }
    }
  }
  require(cfg.scheme.lambda > 0.0, "scheme.lambda", "must be positive");
  require(cfg.scheme.a > 0.0, "scheme.a", "must be positive");
  require(cfg.scheme.cfl > 0.0 && cfg.scheme.cfl <= 1.0, "scheme.cfl", "must lie in (0, 1]");
  for (double s : cfg.scheme.s) require(s >= 0.0 && s <= 2.0, "scheme.s", "relaxation rates must lie in [0, 2]");

  if (root.has("riemann")) {
    Node r = root.child("riemann");
    const Primitive2D left = read_state(r, "left", {cfg.riemann.left.rho, cfg.riemann.left.u, 0.0}, false);
    const Primitive2D right = read_state(r, "right", {cfg.riemann.right.rho, cfg.riemann.right.u, 0.0}, false);
    cfg.riemann.left = {left.rho, left.u};
    cfg.riemann.right = {right.rho, right.u};
    cfg.riemann.length = r.number("length", cfg.riemann.length);
    cfg.riemann.diaphragm = r.number("diaphragm", 0.5 * cfg.riemann.length);
    cfg.riemann.bc = parse_boundary(r.string("bc", "inflow"), "riemann.bc");
    require(cfg.riemann.length > 0.0, "riemann.length", "must be positive");
    require(cfg.riemann.diaphragm > 0.0 && cfg.riemann.diaphragm < cfg.riemann.length, "riemann.diaphragm",
            "must lie inside the domain");
  }
  if (root.has("reflection")) {
    Node r = root.child("reflection");
    ReflectionStates& st = cfg.reflection.states;
    st.left = read_state(r, "left", st.left);
    st.top = read_state(r, "top", st.top);
    st.right = read_state(r, "right", st.right);
  }
  if (root.has("emery")) {
    Node e = root.child("emery");
    cfg.emery.inflow = read_state(e, "inflow", cfg.emery.inflow);
    cfg.emery.length = e.number("length", cfg.emery.length);
    cfg.emery.height = e.number("height", cfg.emery.height);
    cfg.emery.step_x = e.number("step_x", cfg.emery.step_x);
    cfg.emery.step_height = e.number("step_height", cfg.emery.step_height);
    require(cfg.emery.length > 0.0 && cfg.emery.height > 0.0, "emery", "channel size must be positive");
    require(cfg.emery.step_x > 0.0 && cfg.emery.step_x < cfg.emery.length, "emery.step_x", "must lie inside the channel");
    require(cfg.emery.step_height >= 0.0 && cfg.emery.step_height < cfg.emery.height, "emery.step_height",
            "must lie in [0, height)");
  }
  if (root.has("uniform")) {
    Node u = root.child("uniform");
    cfg.uniform.dim = static_cast<int>(u.integer("dim", 1));
    cfg.uniform.state = read_state(u, "state", cfg.uniform.state);
    cfg.uniform.length = u.number("length", 1.0);
    cfg.uniform.height = u.number("height", 1.0);
    require(cfg.uniform.dim == 1 || cfg.uniform.dim == 2, "uniform.dim", "must be 1 or 2");
    require(cfg.uniform.length > 0.0 && cfg.uniform.height > 0.0, "uniform", "domain size must be positive");
  }
  if (root.has("custom")) {
    Node c = root.child("custom");
    CustomPayload& cp = cfg.custom;
    cp.dim = static_cast<int>(c.integer("dim", 1));
    require(cp.dim == 1 || cp.dim == 2, "custom.dim", "must be 1 or 2");
    cp.length = c.number("length", 1.0);
    cp.height = c.number("height", 1.0);
    require(cp.length > 0.0 && cp.height > 0.0, "custom", "domain size must be positive");
    cp.background = read_state(c, "background", cp.background);
    if (c.has("regions")) {
      const json& regions = c.raw("regions");
      require(regions.is_array(), "custom.regions", "expected an array");
      for (std::size_t k = 0; k < regions.size(); ++k) {
        const std::string path = "custom.regions[" + std::to_string(k) + "]";
        Node region(regions[k], path);
        Region r;
        r.box = read_box(region.raw("box"), path + ".box");
        r.state = read_state(region, "state", cp.background);
        cp.regions.push_back(r);
      }
    }
    if (c.has("obstacles")) {
      const json& obstacles = c.raw("obstacles");
      require(obstacles.is_array(), "custom.obstacles", "expected an array");
      for (std::size_t k = 0; k < obstacles.size(); ++k) {
        cp.obstacles.push_back(read_box(obstacles[k], "custom.obstacles[" + std::to_string(k) + "]"));
      }
    }
    if (c.has("bc")) {
      Node bc = c.child("bc");
      const std::array<const char*, 4> names{"left", "right", "bottom", "top"};
      for (int side = 0; side < 4; ++side) {
        if (!bc.has(names[side])) continue;
        Node spec = bc.child(names[side]);
        cp.bc[side].kind = parse_boundary(spec.string("kind", "periodic"), spec.child_path("kind"));
        cp.bc[side].state = read_state(spec, "state", cp.background);
      }
    }
    const auto periodic = [&](int s) { return cp.bc[s].kind == BoundaryKind::Periodic; };
    require(periodic(0) == periodic(1) && periodic(2) == periodic(3), "custom.bc",
            "periodic sides must come in opposite pairs");
  }

  const int dim = cfg.dim();
  expand_rates(cfg.scheme.s, dim);

  require(root.has("mesh"), "mesh", "missing required field");
  {
    Node mesh = root.child("mesh");
    if (dim == 1) {
      require(mesh.has("n"), "mesh.n", "missing required field");
      cfg.mesh.n = static_cast<int>(mesh.integer("n", 0));
      require(cfg.mesh.n >= 4, "mesh.n", "needs at least 4 cells");
    } else {
      require(mesh.has("nx"), "mesh.nx", "missing required field");
      require(mesh.has("ny"), "mesh.ny", "missing required field");
      cfg.mesh.nx = static_cast<int>(mesh.integer("nx", 0));
      cfg.mesh.ny = static_cast<int>(mesh.integer("ny", 0));
      require(cfg.mesh.nx >= 1, "mesh.nx", "must be positive");
      require(cfg.mesh.ny >= 1, "mesh.ny", "must be positive");
      const auto extent = domain_extent(cfg);
      const double dx = extent[0] / cfg.mesh.nx;
      const double dy = extent[1] / cfg.mesh.ny;
      require(std::abs(dx - dy) <= 1e-9 * dx, "mesh",
              "cells must be square: the domain is " + std::to_string(extent[0]) + " x " + std::to_string(extent[1]));
    }
  }

  require(root.has("time"), "time", "missing required field");
  {
    Node time = root.child("time");
    cfg.time.t_end = time.required_number("t_end");
    cfg.time.output_every = time.integer("output_every", 0);
    cfg.time.steady_tol = time.number("steady_tol", 0.0);
    require(cfg.time.t_end > 0.0, "time.t_end", "must be positive");
    require(cfg.time.output_every >= 0, "time.output_every", "must be non-negative");
    require(cfg.time.steady_tol >= 0.0, "time.steady_tol", "must be non-negative");
  }

  if (root.has("output")) {
    Node out = root.child("output");
    cfg.output.directory = out.string("directory", cfg.output.directory);
    const std::string format = out.string("format", "csv");
    if (format == "csv") {
      cfg.output.format = OutputFormat::Csv;
    } else if (format == "vtk") {
      cfg.output.format = OutputFormat::Vtk;
    } else {
      throw ConfigError("output.format", "expected csv or vtk");
    }
  }
  require(!(cfg.output.format == OutputFormat::Vtk && dim == 1), "output.format", "vtk output requires a 2D case");

  if (cfg.solver == SolverKind::Exact) {
    require(cfg.kind == CaseKind::Riemann1D || cfg.kind == CaseKind::Reflection2D || cfg.kind == CaseKind::Uniform,
            "solver", "no exact solution for case '" + kind + "'");
  }
  return cfg;
}

std::string dump_config(const CaseConfig& cfg) {
  json doc;
  doc["case"] = to_string(cfg.kind);
  doc["name"] = cfg.name;
  doc["solver"] = to_string(cfg.solver);
  doc["threads"] = cfg.threads;
  doc["phys"] = {{"gamma", cfg.phys.gamma()}, {"rho0", cfg.phys.rho0()}, {"p0", cfg.phys.p0()}};
  json s = cfg.scheme.s.size() == 1 ? json(cfg.scheme.s.front()) : json(cfg.scheme.s);
  doc["scheme"] = {{"lambda", cfg.scheme.lambda}, {"a", cfg.scheme.a}, {"s", s}, {"cfl", cfg.scheme.cfl}};
  if (cfg.dim() == 1) {
    doc["mesh"] = {{"n", cfg.mesh.n}};
  } else {
    doc["mesh"] = {{"nx", cfg.mesh.nx}, {"ny", cfg.mesh.ny}};
  }
  doc["time"] = {{"t_end", cfg.time.t_end}, {"output_every", cfg.time.output_every},
                 {"steady_tol", cfg.time.steady_tol}};
  switch (cfg.kind) {
    case CaseKind::Riemann1D:
      doc["riemann"] = {{"left", {{"rho", cfg.riemann.left.rho}, {"u", cfg.riemann.left.u}}},
                        {"right", {{"rho", cfg.riemann.right.rho}, {"u", cfg.riemann.right.u}}},
                        {"diaphragm", cfg.riemann.diaphragm},
                        {"length", cfg.riemann.length},
                        {"bc", to_string(cfg.riemann.bc)}};
      break;
    case CaseKind::Reflection2D:
      doc["reflection"] = {{"left", state_json(cfg.reflection.states.left)},
                           {"top", state_json(cfg.reflection.states.top)},
                           {"right", state_json(cfg.reflection.states.right)}};
      break;
    case CaseKind::Emery2D:
      doc["emery"] = {{"inflow", state_json(cfg.emery.inflow)}, {"length", cfg.emery.length},
                      {"height", cfg.emery.height}, {"step_x", cfg.emery.step_x},
                      {"step_height", cfg.emery.step_height}};
      break;
    case CaseKind::Uniform:
      doc["uniform"] = {{"dim", cfg.uniform.dim}, {"state", state_json(cfg.uniform.state)},
                        {"length", cfg.uniform.length}, {"height", cfg.uniform.height}};
      break;
    case CaseKind::Custom: {
      json c = {{"dim", cfg.custom.dim}, {"length", cfg.custom.length}, {"height", cfg.custom.height},
                {"background", state_json(cfg.custom.background)}};
      c["regions"] = json::array();
      for (const Region& r : cfg.custom.regions) {
        c["regions"].push_back({{"box", {r.box.x0, r.box.x1, r.box.y0, r.box.y1}}, {"state", state_json(r.state)}});
      }
      c["obstacles"] = json::array();
      for (const Box& b : cfg.custom.obstacles) c["obstacles"].push_back({b.x0, b.x1, b.y0, b.y1});
      const std::array<const char*, 4> names{"left", "right", "bottom", "top"};
      for (int side = 0; side < 4; ++side) {
        c["bc"][names[side]] = {{"kind", to_string(cfg.custom.bc[side].kind)},
                                {"state", state_json(cfg.custom.bc[side].state)}};
      }
      doc["custom"] = c;
      break;
    }
  }
  doc["output"] = {{"directory", cfg.output.directory},
                   {"format", cfg.output.format == OutputFormat::Csv ? "csv" : "vtk"}};
  return doc.dump(2);
}

}  // namespace swlbm
