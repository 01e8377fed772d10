#include "mbqc/geometry.hpp"

#include <algorithm>

namespace mbqc {

std::string plane_name(MeasPlane p) {
  switch (p) {
    case MeasPlane::XY: return "XY";
    case MeasPlane::YZ: return "YZ";
    case MeasPlane::XZ: return "XZ";
  }
  return "XY";
}

MeasPlane plane_from_name(const std::string& s) {
  if (s == "XY") return MeasPlane::XY;
  if (s == "YZ") return MeasPlane::YZ;
  if (s == "XZ") return MeasPlane::XZ;
  raise(ErrorKind::BadArgs, "unknown measurement plane: " + s);
}

void Geometry::add_edge(const std::string& u, const std::string& v, Angle theta) {
  if (u == v) raise(ErrorKind::BadArgs, "self-loop on " + u);
  vertices.insert(u);
  vertices.insert(v);
  if (theta.is_zero()) return;
  edges[make_edge(u, v)] = theta;
}

Angle Geometry::edge_weight(const std::string& u, const std::string& v) const {
  auto it = edges.find(make_edge(u, v));
  return it == edges.end() ? Angle::zero() : it->second;
}

bool Geometry::unit_weight() const {
  for (const auto& [e, w] : edges)
    if (!w.is_pi()) return false;
  return true;
}

std::set<std::string> Geometry::neighbors(const std::string& v) const {
  std::set<std::string> nb;
  for (const auto& [e, w] : edges) {
    if (e.first == v) nb.insert(e.second);
    if (e.second == v) nb.insert(e.first);
  }
  return nb;
}

std::size_t Geometry::degree(const std::string& v) const {
  std::size_t d = 0;
  for (const auto& [e, w] : edges)
    if (e.first == v || e.second == v) ++d;
  return d;
}

std::set<std::string> Geometry::measured() const {
  std::set<std::string> r;
  for (const auto& v : vertices)
    if (!outputs.count(v)) r.insert(v);
  return r;
}

std::set<std::string> Geometry::prepared() const {
  std::set<std::string> r;
  for (const auto& v : vertices)
    if (!inputs.count(v)) r.insert(v);
  return r;
}

void Geometry::check() const {
  for (const auto& [e, w] : edges) {
    if (e.first == e.second) raise(ErrorKind::BadArgs, "self-loop on " + e.first);
    if (!vertices.count(e.first) || !vertices.count(e.second))
      raise(ErrorKind::BadArgs, "edge endpoint not a vertex: " + e.first + "-" + e.second);
    if (w.is_zero()) raise(ErrorKind::BadArgs, "zero-weight edge stored");
  }
  for (const auto& v : inputs)
    if (!vertices.count(v)) raise(ErrorKind::BadArgs, "input not a vertex: " + v);
  for (const auto& v : outputs)
    if (!vertices.count(v)) raise(ErrorKind::BadArgs, "output not a vertex: " + v);
  for (const auto& [v, p] : planes)
    if (outputs.count(v)) raise(ErrorKind::BadArgs, "plane tag on output vertex: " + v);
}

Geometry compose_geometries(const Geometry& g1, const Geometry& g2) {
  for (const auto& v : g1.vertices)
    if (g2.vertices.count(v) && !(g2.inputs.count(v) && g1.outputs.count(v)))
      raise(ErrorKind::NotComposable,
            "shared vertex " + v + " is not in I2 cap O1");

  Geometry r;
  r.vertices = g1.vertices;
  r.vertices.insert(g2.vertices.begin(), g2.vertices.end());
  r.edges = g1.edges;
  for (const auto& [e, w] : g2.edges) {
    auto it = r.edges.find(e);
    if (it == r.edges.end()) {
      r.edges[e] = w;
    } else {
      Angle sum = it->second + w;
      if (sum.is_zero())
        r.edges.erase(it);
      else
        it->second = sum;
    }
  }
  r.inputs = g1.inputs;
  for (const auto& v : g2.inputs)
    if (!g1.outputs.count(v)) r.inputs.insert(v);
  r.outputs = g2.outputs;
  for (const auto& v : g1.outputs)
    if (!g2.inputs.count(v)) r.outputs.insert(v);
  r.planes = g1.planes;
  for (const auto& [v, p] : g2.planes) r.planes[v] = p;
  return r;
}

namespace {
std::string grid_label(int r, int c) {
  return "r" + std::to_string(r) + "c" + std::to_string(c);
}
}  // namespace

Geometry grid_geometry(int n, int d) {
  if (n < 1 || d < 1) raise(ErrorKind::BadArgs, "grid dimensions must be >= 1");
  Geometry g;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < d; ++c) {
      g.add_vertex(grid_label(r, c));
      if (c > 0) g.add_edge(grid_label(r, c - 1), grid_label(r, c));
      if (r > 0) g.add_edge(grid_label(r - 1, c), grid_label(r, c));
    }
  for (int r = 0; r < n; ++r) {
    g.inputs.insert(grid_label(r, 0));
    g.outputs.insert(grid_label(r, d - 1));
  }
  return g;
}

Geometry no_flow_fixture() {
  Geometry g;
  for (int j = 0; j < 3; ++j) {
    g.add_vertex("a" + std::to_string(j));
    g.add_vertex("b" + std::to_string(j));
    g.inputs.insert("a" + std::to_string(j));
    g.outputs.insert("b" + std::to_string(j));
  }
  for (int j = 0; j < 3; ++j) {
    g.add_edge("a" + std::to_string(j), "b" + std::to_string(j));
    g.add_edge("a" + std::to_string(j), "b" + std::to_string((j + 2) % 3));
  }
  return g;
}

Geometry qubit_reversal_fixture(int k) {
  if (k < 1) raise(ErrorKind::BadArgs, "k must be >= 1");
  int rows = 2 * k - 1, cols = 2 * k + 1;
  Geometry g = grid_geometry(rows, cols);
  g.inputs.clear();
  g.outputs.clear();
  for (int r = 0; r < rows; r += 2) {
    g.inputs.insert(grid_label(r, 0));
    g.outputs.insert(grid_label(r, cols - 1));
  }
  return g;
}

Geometry zz_star_geometry(int k) {
  if (k < 1) raise(ErrorKind::BadArgs, "k must be >= 1");
  Geometry g;
  g.add_vertex("a");
  g.planes["a"] = MeasPlane::YZ;
  for (int j = 1; j <= k; ++j) {
    std::string leaf = "v" + std::to_string(j);
    g.add_edge("a", leaf);
    g.inputs.insert(leaf);
    g.outputs.insert(leaf);
  }
  return g;
}

}  // namespace mbqc
