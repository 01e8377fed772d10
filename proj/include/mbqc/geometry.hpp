#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/errors.hpp"

namespace mbqc {

enum class MeasPlane { XY, YZ, XZ };

std::string plane_name(MeasPlane p);
MeasPlane plane_from_name(const std::string& s);

using Edge = std::pair<std::string, std::string>;  // normalized: first < second

inline Edge make_edge(const std::string& u, const std::string& v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// A geometry (G, I, O): the entanglement graph of a one-way pattern with its
// input and output subsystems.  Edge weights are the quadratic-form
// coefficients theta_uv; a weight of pi is a unit edge (an ordinary CZ), and
// fractional weights arise only from quadratic form expansions.
struct Geometry {
  std::set<std::string> vertices;
  std::map<Edge, Angle> edges;  // weight w = theta/pi; unit edge <=> theta == pi
  std::set<std::string> inputs;
  std::set<std::string> outputs;
  std::map<std::string, MeasPlane> planes;  // tags on non-output vertices

  void add_vertex(const std::string& v) { vertices.insert(v); }
  void add_edge(const std::string& u, const std::string& v, Angle theta = Angle::pi());
  bool has_edge(const std::string& u, const std::string& v) const {
    return edges.count(make_edge(u, v)) > 0;
  }
  Angle edge_weight(const std::string& u, const std::string& v) const;

  std::size_t n() const { return vertices.size(); }
  std::size_t m() const { return edges.size(); }

  bool unit_weight() const;
  std::set<std::string> neighbors(const std::string& v) const;
  std::size_t degree(const std::string& v) const;

  // non-outputs / non-inputs
  std::set<std::string> measured() const;
  std::set<std::string> prepared() const;

  // checks the structural invariants; throws Error(BadArgs) on violation
  void check() const;
};

// Composition of geometries (edge weights add mod 2pi, which on unit-weight
// edges is the symmetric difference).  Throws NotComposable unless
// V1 cap V2 is contained in I2 cap O1.
Geometry compose_geometries(const Geometry& g1, const Geometry& g2);

// Fixtures -------------------------------------------------------------

// n x d lattice; I = left column, O = right column.  Labels "r<i>c<j>".
Geometry grid_geometry(int n, int d);

// The 6-vertex geometry with successor functions but no flow:
// I = {a0,a1,a2}, O = {b0,b1,b2}, edges {a_j b_j} and {a_j b_(j-1 mod 3)}.
Geometry no_flow_fixture();

// (2k-1) x (2k+1) grid with I = left ends of even rows, O = right ends of
// even rows (the qubit-reversal geometry; has no flow).
Geometry qubit_reversal_fixture(int k);

// Star geometry of the Zz...z pattern: center "a" (YZ plane) with k leaves
// v1..vk, I = O = leaves.
Geometry zz_star_geometry(int k);

}  // namespace mbqc
