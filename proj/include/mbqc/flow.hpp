#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/geometry.hpp"

namespace mbqc {

// Successor function of a path cover: f maps each covered non-output vertex
// to the next vertex on its path, g is the inverse.  Eflows may have
// f(v) = v on YZ-measured vertices.
struct SuccessorMap {
  std::map<std::string, std::string> f;
  std::map<std::string, std::string> g;

  std::optional<std::string> succ(const std::string& v) const {
    auto it = f.find(v);
    return it == f.end() ? std::nullopt : std::optional<std::string>(it->second);
  }
  std::optional<std::string> pred(const std::string& v) const {
    auto it = g.find(v);
    return it == g.end() ? std::nullopt : std::optional<std::string>(it->second);
  }
};

// Chain-decomposition encoding of the natural pre-order: v <= w iff
// Dist(v) <= Inf(w, Path(v)).  Inf stores -1 for "no ancestor on that path".
struct SystemOfInfima {
  std::map<std::string, int> dist;
  std::map<std::string, int> path;              // path ids 1..k
  std::map<std::string, std::vector<int>> inf;  // per vertex, indexed by path id - 1
  int path_count = 0;
};

// Layer encoding of a partial order: v <= w iff v == w or layer(v) > layer(w).
using LayerMap = std::map<std::string, int>;

// v <= w under the stored order.  Throws UnknownVertex for labels the order
// does not know.
bool preceq_query(const SystemOfInfima& ord, const std::string& u, const std::string& v);
bool preceq_query(const LayerMap& ord, const std::string& u, const std::string& v);

enum class FlowKind { Flow, EFlow };

struct FlowCertificate {
  FlowKind kind = FlowKind::Flow;
  SuccessorMap successor;
  std::variant<SystemOfInfima, LayerMap> order;
  std::set<std::string> yz_set;  // T; empty for plain flows

  bool preceq(const std::string& u, const std::string& v) const {
    if (auto* s = std::get_if<SystemOfInfima>(&order)) return preceq_query(*s, u, v);
    return preceq_query(std::get<LayerMap>(order), u, v);
  }
};

struct GflowCertificate {
  std::map<std::string, std::set<std::string>> g;  // corrector sets on non-outputs
  LayerMap layers;
  std::map<std::string, MeasPlane> planes;
};

// --- operations --------------------------------------------------------

// Arcs v->f(v) and v->w for w ~ f(v), w != v.  Throws NotPathCover unless the
// orbits of s form a path cover of geo.
std::map<std::string, std::set<std::string>> influence_digraph(const Geometry& geo,
                                                               const SuccessorMap& s);

// Maximum-size family of vertex-disjoint I-O directed paths by iterated
// alternating-walk augmentation (the family may leave vertices uncovered).
// Neighbors are explored in sorted label order.
SuccessorMap max_path_family(const Geometry& geo);

// System of infima for the natural pre-order of s, or nullopt if the
// influence digraph has a directed circuit.  Throws NotPathCover.
std::optional<SystemOfInfima> natural_preorder(const Geometry& geo, const SuccessorMap& s);

// The complete flow-finding algorithm for |I| = |O| (throws UnequalIO
// otherwise): edge-count gate, unique maximum path family, then the natural
// pre-order test.  The returned order is the coarsest causal order.
std::optional<FlowCertificate> find_flow(const Geometry& geo);

// Maximally-delayed layer construction for extended flows; T is the set of
// YZ-measured vertices (throws BadT if it touches I or O).  With T empty and
// |I| <= |O| this is the layered flow-finder.
std::optional<FlowCertificate> find_eflow(const Geometry& geo, const std::set<std::string>& T);

// Gflow certificate check: ordering conditions on g(v) and Odd(g(v)) plus the
// per-plane membership conditions.
bool verify_gflow(const Geometry& geo, const GflowCertificate& cert);

// Vertices adjacent to an odd number of elements of S.
std::set<std::string> odd_neighborhood(const Geometry& geo, const std::set<std::string>& S);

// Extremal graph G(n1..nk) saturating the edge bound; I = path starts,
// O = path ends.  Throws BadPartition unless 1 <= n1 <= ... <= nk.
Geometry extremal_graph(const std::vector<int>& partition);

// Gamma(n,k) = kn - k(k+1)/2 for n >= k >= 1 (throws BadArgs otherwise).
long long edge_bound(long long n, long long k);

// Exhaustive oracle: enumerate injective f: O^c -> I^c with v ~ f(v) whose
// orbits form a path cover, accept iff the influence digraph is acyclic.
// Throws TooLarge above 16 vertices.  The certificate order is a layer map
// from longest paths in the influence digraph.
std::optional<FlowCertificate> brute_force_flow(const Geometry& geo);

// Longest-path layering of the influence digraph of a flow function
// (a valid causal order; used to lift flows to gflow certificates).
LayerMap influence_layers(const Geometry& geo, const SuccessorMap& s);

// Lift flow/eflow certificates to gflow certificates: g(v) = {f(v)},
// XY planes everywhere except YZ on the yz_set.
GflowCertificate lift_to_gflow(const Geometry& geo, const FlowCertificate& cert);

}  // namespace mbqc
