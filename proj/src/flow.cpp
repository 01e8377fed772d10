#include "mbqc/flow.hpp"

#include <algorithm>
#include <cassert>

namespace mbqc {

namespace {

// Label-free working form shared by the flow algorithms.  Labels are sorted
// once so that "sorted label order" tie-breaking is index order.
struct IndexedGeom {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj;  // sorted
  std::vector<char> in_set, out_set;
  std::vector<int> out_list;  // sorted
  long long m = 0;

  explicit IndexedGeom(const Geometry& geo) {
    labels.assign(geo.vertices.begin(), geo.vertices.end());
    n = static_cast<int>(labels.size());
    adj.resize(n);
    in_set.assign(n, 0);
    out_set.assign(n, 0);
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[labels[i]] = i;
    for (const auto& [e, w] : geo.edges) {
      int a = idx.at(e.first), b = idx.at(e.second);
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++m;
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    for (const auto& v : geo.inputs) in_set[idx.at(v)] = 1;
    for (const auto& v : geo.outputs) {
      out_set[idx.at(v)] = 1;
      out_list.push_back(idx.at(v));
    }
    std::sort(out_list.begin(), out_list.end());
  }

  int index_of(const std::string& label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return -1;
    return static_cast<int>(it - labels.begin());
  }
};

constexpr int kNil = -1;

// Depth-first search along alternating walks; augments the family of paths
// stored in (f, g) by one I-O path when it succeeds.  Entry points into
// existing paths are deliberately left unmarked so they can be traversed a
// second time.
struct PathAugmenter {
  const IndexedGeom& G;
  std::vector<int> f, g;
  std::vector<int> marked;
  int iter = 0;
  bool foundpath = false;

  explicit PathAugmenter(const IndexedGeom& geom)
      : G(geom), f(geom.n, kNil), g(geom.n, kNil), marked(geom.n, 0) {}

  void search(int v) {
    marked[v] = iter;
    if (G.in_set[v]) {
      foundpath = true;
      return;
    }
    int w = f[v];
    if (w != kNil && marked[w] < iter) {
      search(w);
      if (foundpath) {
        f[v] = kNil;
        g[v] = kNil;
        return;
      }
    }
    for (int z : G.adj[v]) {
      if (G.out_set[z] || marked[z] >= iter) continue;
      if (f[z] == kNil) {
        search(z);
        if (foundpath) {
          f[z] = v;
          g[v] = z;
          return;
        }
      } else {
        int w2 = f[z];  // z is an entry point; advance along its path
        if (marked[w2] < iter) {
          search(w2);
          if (foundpath) {
            f[z] = v;
            g[v] = z;
            return;
          }
        }
      }
    }
  }

  void run() {
    bool progressed = true;
    while (progressed) {
      ++iter;
      foundpath = false;
      for (int v : G.out_list) {
        if (G.in_set[v] || g[v] != kNil || marked[v] == iter) continue;
        search(v);
        if (foundpath) break;
      }
      progressed = foundpath;
    }
  }
};

// Path-labelling plus infima arrays for the natural pre-order, built while
// testing antisymmetry (a chain-decomposition variant of transitive closure).
struct InfimaBuilder {
  const IndexedGeom& G;
  const std::vector<int>& f;
  const std::vector<int>& g;
  int k;
  std::vector<int> dist, path, inf;  // inf is n x k, row-major
  std::vector<char> status;          // 0 untouched, 1 incomplete, 2 complete
  bool foundcircuit = false;

  InfimaBuilder(const IndexedGeom& geom, const std::vector<int>& fs, const std::vector<int>& gs)
      : G(geom),
        f(fs),
        g(gs),
        k(static_cast<int>(geom.out_list.size())),
        dist(geom.n, 0),
        path(geom.n, 0),
        inf(static_cast<std::size_t>(geom.n) * std::max(k, 1), -1),
        status(geom.n, 0) {}

  void initialize_path(int w, int p) {
    if (g[w] == kNil)
      dist[w] = 0;
    else {
      initialize_path(g[w], p);
      dist[w] = dist[g[w]] + 1;
    }
    path[w] = p;
    int* row = &inf[static_cast<std::size_t>(w) * k];
    for (int q = 0; q < k; ++q) row[q] = -1;
    row[p] = dist[w];
    status[w] = 0;
  }

  void find_infima(int w) {
    if (status[w] == 1) foundcircuit = true;
    if (status[w] != 0) return;
    status[w] = 1;
    int* row = &inf[static_cast<std::size_t>(w) * k];
    for (int z : G.adj[w]) {
      if (f[w] != kNil && z == f[w]) continue;
      int v;
      if (g[w] != kNil && z == g[w])
        v = z;  // the direct predecessor on w's own path
      else if (g[z] != kNil)
        v = g[z];  // z = f(v) for some v; w is adjacent to z
      else
        continue;
      find_infima(v);
      if (foundcircuit) return;
      const int* vrow = &inf[static_cast<std::size_t>(v) * k];
      for (int q = 0; q < k; ++q)
        if (row[q] < vrow[q]) row[q] = vrow[q];
    }
    status[w] = 2;
  }

  bool run() {
    int next = 0;
    for (int w : G.out_list) initialize_path(w, next++);
    for (int w : G.out_list) {
      find_infima(w);
      if (foundcircuit) return false;
    }
    return true;
  }
};

SuccessorMap to_successor_map(const IndexedGeom& G, const std::vector<int>& f,
                              const std::vector<int>& g) {
  SuccessorMap s;
  for (int v = 0; v < G.n; ++v) {
    if (f[v] != kNil) s.f[G.labels[v]] = G.labels[f[v]];
    if (g[v] != kNil) s.g[G.labels[v]] = G.labels[g[v]];
  }
  return s;
}

SystemOfInfima to_infima(const IndexedGeom& G, const InfimaBuilder& b) {
  SystemOfInfima s;
  s.path_count = b.k;
  for (int v = 0; v < G.n; ++v) {
    s.dist[G.labels[v]] = b.dist[v];
    s.path[G.labels[v]] = b.path[v] + 1;
    s.inf[G.labels[v]] =
        std::vector<int>(b.inf.begin() + static_cast<std::size_t>(v) * b.k,
                         b.inf.begin() + static_cast<std::size_t>(v + 1) * b.k);
  }
  return s;
}

// Loads a SuccessorMap into index form, checking the successor-function
// invariants (injectivity, adjacency, domain O^c, image I^c, no orbit
// cycles).  Throws NotPathCover on violation.
void load_successor(const IndexedGeom& G, const SuccessorMap& s, std::vector<int>& f,
                    std::vector<int>& g, bool allow_fixed_points = false) {
  f.assign(G.n, kNil);
  g.assign(G.n, kNil);
  for (const auto& [a, b] : s.f) {
    int va = G.index_of(a), vb = G.index_of(b);
    if (va < 0 || vb < 0) raise(ErrorKind::NotPathCover, "successor map names unknown vertex");
    f[va] = vb;
  }
  for (int v = 0; v < G.n; ++v) {
    bool fixed = f[v] == v;
    if (f[v] != kNil) {
      if (G.out_set[v]) raise(ErrorKind::NotPathCover, "successor defined on an output");
      if (G.in_set[f[v]]) raise(ErrorKind::NotPathCover, "successor maps into an input");
      if (fixed) {
        if (!allow_fixed_points)
          raise(ErrorKind::NotPathCover, "successor has a fixed point");
      } else {
        if (!std::binary_search(G.adj[v].begin(), G.adj[v].end(), f[v]))
          raise(ErrorKind::NotPathCover, "successor is not a neighbor");
        if (g[f[v]] != kNil) raise(ErrorKind::NotPathCover, "successor map is not injective");
        g[f[v]] = v;
      }
    } else if (!G.out_set[v]) {
      raise(ErrorKind::NotPathCover, "non-output vertex without successor");
    }
  }
  // orbits must be paths, not cycles
  std::vector<char> seen(G.n, 0);
  for (int v = 0; v < G.n; ++v) {
    if (g[v] != kNil || seen[v]) continue;
    int u = v;
    while (u != kNil && !seen[u]) {
      seen[u] = 1;
      u = (f[u] == u) ? kNil : f[u];
    }
  }
  for (int v = 0; v < G.n; ++v)
    if (!seen[v]) raise(ErrorKind::NotPathCover, "successor orbits contain a cycle");
}

void require_unit_weight(const Geometry& geo, const char* who) {
  if (!geo.unit_weight())
    raise(ErrorKind::BadArgs, std::string(who) + " requires a unit-weight geometry");
}

}  // namespace

bool preceq_query(const SystemOfInfima& ord, const std::string& u, const std::string& v) {
  auto du = ord.dist.find(u);
  auto pv = ord.inf.find(v);
  auto pu = ord.path.find(u);
  if (du == ord.dist.end() || pu == ord.path.end() || pv == ord.inf.end())
    raise(ErrorKind::UnknownVertex, "vertex not covered by the system of infima");
  return du->second <= pv->second.at(pu->second - 1);
}

bool preceq_query(const LayerMap& ord, const std::string& u, const std::string& v) {
  if (u == v) {
    if (!ord.count(u)) raise(ErrorKind::UnknownVertex, "vertex not covered by the layer map");
    return true;
  }
  auto lu = ord.find(u);
  auto lv = ord.find(v);
  if (lu == ord.end() || lv == ord.end())
    raise(ErrorKind::UnknownVertex, "vertex not covered by the layer map");
  return lu->second > lv->second;
}

std::map<std::string, std::set<std::string>> influence_digraph(const Geometry& geo,
                                                               const SuccessorMap& s) {
  IndexedGeom G(geo);
  std::vector<int> f, g;
  load_successor(G, s, f, g, /*allow_fixed_points=*/true);
  std::map<std::string, std::set<std::string>> arcs;
  for (const auto& v : geo.vertices) arcs[v];
  for (int v = 0; v < G.n; ++v) {
    if (f[v] == kNil) continue;
    auto& out = arcs[G.labels[v]];
    if (f[v] != v) out.insert(G.labels[f[v]]);
    for (int w : G.adj[f[v]])
      if (w != v) out.insert(G.labels[w]);
  }
  return arcs;
}

SuccessorMap max_path_family(const Geometry& geo) {
  require_unit_weight(geo, "max_path_family");
  IndexedGeom G(geo);
  PathAugmenter aug(G);
  aug.run();
  return to_successor_map(G, aug.f, aug.g);
}

std::optional<SystemOfInfima> natural_preorder(const Geometry& geo, const SuccessorMap& s) {
  IndexedGeom G(geo);
  std::vector<int> f, g;
  load_successor(G, s, f, g);
  InfimaBuilder b(G, f, g);
  if (!b.run()) return std::nullopt;
  return to_infima(G, b);
}

long long edge_bound(long long n, long long k) {
  if (!(n >= k && k >= 1)) raise(ErrorKind::BadArgs, "edge_bound requires n >= k >= 1");
  return k * n - k * (k + 1) / 2;
}

std::optional<FlowCertificate> find_flow(const Geometry& geo) {
  require_unit_weight(geo, "find_flow");
  if (geo.inputs.size() != geo.outputs.size())
    raise(ErrorKind::UnequalIO, "find_flow requires |I| = |O|");
  long long n = static_cast<long long>(geo.n());
  long long k = static_cast<long long>(geo.outputs.size());
  if (k == 0) {
    if (n == 0) return FlowCertificate{FlowKind::Flow, {}, SystemOfInfima{}, {}};
    return std::nullopt;  // non-empty graph cannot be covered by zero paths
  }
  if (static_cast<long long>(geo.m()) > edge_bound(n, k)) return std::nullopt;

  IndexedGeom G(geo);
  PathAugmenter aug(G);
  aug.run();
  for (int v = 0; v < G.n; ++v)
    if (aug.f[v] == kNil && aug.g[v] == kNil && !(G.in_set[v] && G.out_set[v]))
      return std::nullopt;  // not a path cover: by uniqueness, no flow exists

  InfimaBuilder b(G, aug.f, aug.g);
  if (!b.run()) return std::nullopt;
  FlowCertificate cert;
  cert.kind = FlowKind::Flow;
  cert.successor = to_successor_map(G, aug.f, aug.g);
  cert.order = to_infima(G, b);
  return cert;
}

std::optional<FlowCertificate> find_eflow(const Geometry& geo, const std::set<std::string>& T) {
  require_unit_weight(geo, "find_eflow");
  for (const auto& v : T)
    if (geo.inputs.count(v) || geo.outputs.count(v) || !geo.vertices.count(v))
      raise(ErrorKind::BadT, "T must be a subset of V minus (I union O)");

  long long n = static_cast<long long>(geo.n());
  long long k = static_cast<long long>(geo.outputs.size());
  if (T.empty() && k >= 1 && static_cast<long long>(geo.m()) > edge_bound(n, k))
    return std::nullopt;  // the extremal gate holds for plain flows only

  IndexedGeom G(geo);
  std::vector<char> in_T(G.n, 0);
  for (const auto& v : T) in_T[G.index_of(v)] = 1;

  std::vector<int> f(G.n, kNil), ell(G.n, 0), unlayered_nbrs(G.n, 0);
  std::vector<char> layered(G.n, 0), queued(G.n, 0);
  int remaining = 0;
  for (int v = 0; v < G.n; ++v) {
    if (G.out_set[v])
      layered[v] = 1;
    else
      ++remaining;
  }
  for (int v = 0; v < G.n; ++v)
    for (int w : G.adj[v])
      if (!layered[w]) ++unlayered_nbrs[v];

  std::vector<int> S;
  for (int v : G.out_list)
    if (!G.in_set[v]) {
      S.push_back(v);
      queued[v] = 1;
    }
  for (int v = 0; v < G.n; ++v)
    if (in_T[v] && unlayered_nbrs[v] == 0) {
      S.push_back(v);
      queued[v] = 1;
    }

  int layer = 0;
  while (remaining > 0) {
    ++layer;
    std::vector<std::pair<int, int>> assigned;  // (vertex, successor)
    std::vector<int> next;
    std::vector<char> claimed(G.n, 0);
    // Eligibility is judged against the state at the start of the layer, so
    // vertices assigned in the same pass cannot enable one another.
    for (int w : S) {
      if (in_T[w]) {
        assigned.emplace_back(w, w);
        continue;
      }
      if (unlayered_nbrs[w] == 1) {
        int v = kNil;
        for (int z : G.adj[w])
          if (!layered[z]) {
            v = z;
            break;
          }
        if (v != kNil && !in_T[v] && !claimed[v]) {
          claimed[v] = 1;
          assigned.emplace_back(v, w);
          continue;
        }
      }
      next.push_back(w);  // carried forward as a candidate successor
    }
    if (assigned.empty()) break;
    for (auto [v, w] : assigned) {
      f[v] = w;
      ell[v] = layer;
      layered[v] = 1;
      --remaining;
      if (v != w && !G.in_set[v] && !queued[v]) {
        next.push_back(v);
        queued[v] = 1;
      }
    }
    for (auto [v, w] : assigned)
      for (int z : G.adj[v]) --unlayered_nbrs[z];
    for (auto [v, w] : assigned)
      for (int z : G.adj[v])
        if (in_T[z] && !layered[z] && unlayered_nbrs[z] == 0 && !queued[z]) {
          next.push_back(z);
          queued[z] = 1;
        }
    S = std::move(next);
  }
  if (remaining > 0) return std::nullopt;

  FlowCertificate cert;
  cert.kind = T.empty() ? FlowKind::Flow : FlowKind::EFlow;
  cert.yz_set = T;
  LayerMap layers;
  for (int v = 0; v < G.n; ++v) {
    layers[G.labels[v]] = ell[v];
    if (f[v] != kNil) {
      cert.successor.f[G.labels[v]] = G.labels[f[v]];
      cert.successor.g[G.labels[f[v]]] = G.labels[v];
    }
  }
  cert.order = std::move(layers);
  return cert;
}

std::set<std::string> odd_neighborhood(const Geometry& geo, const std::set<std::string>& S) {
  std::map<std::string, int> count;
  for (const auto& [e, w] : geo.edges) {
    if (S.count(e.second)) ++count[e.first];
    if (S.count(e.first)) ++count[e.second];
  }
  std::set<std::string> odd;
  for (const auto& [v, c] : count)
    if (c % 2 == 1) odd.insert(v);
  return odd;
}

bool verify_gflow(const Geometry& geo, const GflowCertificate& cert) {
  auto layer_of = [&](const std::string& v, int& out) {
    auto it = cert.layers.find(v);
    if (it == cert.layers.end()) return false;
    out = it->second;
    return true;
  };
  for (const auto& v : geo.measured()) {
    int lv;
    if (!layer_of(v, lv)) return false;
    auto pit = cert.planes.find(v);
    if (pit == cert.planes.end()) return false;
    auto git = cert.g.find(v);
    std::set<std::string> gv = git == cert.g.end() ? std::set<std::string>{} : git->second;
    for (const auto& w : gv)
      if (!geo.vertices.count(w) || geo.inputs.count(w)) return false;
    std::set<std::string> odd = odd_neighborhood(geo, gv);
    for (const auto& w : gv) {
      int lw;
      if (w != v && (!layer_of(w, lw) || !(lv > lw))) return false;
    }
    for (const auto& w : odd) {
      int lw;
      if (w != v && (!layer_of(w, lw) || !(lv > lw))) return false;
    }
    bool in_g = gv.count(v) > 0, in_odd = odd.count(v) > 0;
    switch (pit->second) {
      case MeasPlane::XY:
        if (!(in_odd && !in_g)) return false;
        break;
      case MeasPlane::YZ:
        if (!(in_g && !in_odd)) return false;
        break;
      case MeasPlane::XZ:
        if (!(in_g && in_odd)) return false;
        break;
    }
  }
  return true;
}

Geometry extremal_graph(const std::vector<int>& partition) {
  if (partition.empty()) raise(ErrorKind::BadPartition, "empty partition");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1) raise(ErrorKind::BadPartition, "partition parts must be >= 1");
    if (i > 0 && partition[i - 1] > partition[i])
      raise(ErrorKind::BadPartition, "partition must be sorted ascending");
  }
  int k = static_cast<int>(partition.size());
  auto label = [](int j, int a) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "p%02dv%04d", j, a);
    return std::string(buf);
  };
  Geometry g;
  for (int j = 1; j <= k; ++j) {
    int nj = partition[j - 1];
    for (int a = 1; a <= nj; ++a) {
      g.add_vertex(label(j, a));
      if (a > 1) g.add_edge(label(j, a - 1), label(j, a));
    }
    g.inputs.insert(label(j, 1));
    g.outputs.insert(label(j, nj));
  }
  for (int h = 1; h <= k; ++h)
    for (int j = h + 1; j <= k; ++j) {
      int nh = partition[h - 1], nj = partition[j - 1];
      if (nh > 1)
        for (int a = 1; a < nh; ++a) g.add_edge(label(h, a), label(j, a));  // type i
      if (nj > 1)
        for (int a = 1; a < nh; ++a) g.add_edge(label(h, a + 1), label(j, a));  // type ii
      for (int a = nh; a <= nj; ++a) g.add_edge(label(h, nh), label(j, a));     // type iii
    }
  return g;
}

std::optional<FlowCertificate> brute_force_flow(const Geometry& geo) {
  if (geo.n() > 16) raise(ErrorKind::TooLarge, "brute_force_flow is capped at 16 vertices");
  require_unit_weight(geo, "brute_force_flow");
  IndexedGeom G(geo);
  std::vector<int> domain;  // O^c in sorted order
  for (int v = 0; v < G.n; ++v)
    if (!G.out_set[v]) domain.push_back(v);

  std::vector<int> f(G.n, kNil);
  std::vector<char> used(G.n, 0);

  auto acyclic = [&]() {
    // arcs v -> f(v) and v -> w for w ~ f(v), w != v
    std::vector<char> color(G.n, 0);  // 0 white, 1 grey, 2 black
    std::vector<int> order;
    bool ok = true;
    auto dfs = [&](auto&& self, int v) -> void {
      color[v] = 1;
      if (f[v] != kNil) {
        int fv = f[v];
        auto visit = [&](int w) {
          if (!ok || w == v) return;
          if (color[w] == 1) ok = false;
          if (ok && color[w] == 0) self(self, w);
        };
        visit(fv);
        for (int w : G.adj[fv]) visit(w);
      }
      color[v] = 2;
    };
    for (int v = 0; v < G.n && ok; ++v)
      if (color[v] == 0) dfs(dfs, v);
    return ok;
  };

  auto orbit_paths = [&]() {
    std::vector<char> seen(G.n, 0);
    for (int start = 0; start < G.n; ++start) {
      if (seen[start] || used[start]) continue;  // used <=> in img(f)
      int u = start, steps = 0;
      while (u != kNil) {
        if (steps++ > G.n) return false;  // cycle
        seen[u] = 1;
        u = f[u];
      }
    }
    for (int v = 0; v < G.n; ++v)
      if (!seen[v]) return false;  // a cyclic orbit never reached from a start
    return true;
  };

  std::optional<FlowCertificate> result;
  auto enumerate = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == domain.size()) {
      if (!orbit_paths() || !acyclic()) return false;
      FlowCertificate cert;
      cert.kind = FlowKind::Flow;
      for (int v = 0; v < G.n; ++v)
        if (f[v] != kNil) {
          cert.successor.f[G.labels[v]] = G.labels[f[v]];
          cert.successor.g[G.labels[f[v]]] = G.labels[v];
        }
      cert.order = influence_layers(geo, cert.successor);
      result = std::move(cert);
      return true;
    }
    int v = domain[pos];
    for (int w : G.adj[v]) {
      if (G.in_set[w] || used[w]) continue;
      f[v] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      f[v] = kNil;
      used[w] = 0;
    }
    return false;
  };
  enumerate(enumerate, 0);
  return result;
}

LayerMap influence_layers(const Geometry& geo, const SuccessorMap& s) {
  IndexedGeom G(geo);
  std::vector<int> f, g;
  load_successor(G, s, f, g, /*allow_fixed_points=*/true);
  std::vector<int> depth(G.n, -1);
  std::vector<char> on_stack(G.n, 0);
  auto dfs = [&](auto&& self, int v) -> int {
    if (depth[v] >= 0) return depth[v];
    if (on_stack[v]) raise(ErrorKind::NotAFlow, "influence digraph has a circuit");
    on_stack[v] = 1;
    int best = 0;
    if (f[v] != kNil) {
      int fv = f[v];
      if (fv != v) best = std::max(best, self(self, fv) + 1);
      for (int w : G.adj[fv])
        if (w != v) best = std::max(best, self(self, w) + 1);
    }
    on_stack[v] = 0;
    depth[v] = best;
    return best;
  };
  LayerMap layers;
  for (int v = 0; v < G.n; ++v) layers[G.labels[v]] = dfs(dfs, v);
  return layers;
}

GflowCertificate lift_to_gflow(const Geometry& geo, const FlowCertificate& cert) {
  GflowCertificate out;
  for (const auto& v : geo.measured()) {
    auto s = cert.successor.succ(v);
    if (!s) raise(ErrorKind::BadCertificate, "certificate has no successor for " + v);
    out.g[v] = {*s};
    out.planes[v] = cert.yz_set.count(v) ? MeasPlane::YZ : MeasPlane::XY;
  }
  if (auto* l = std::get_if<LayerMap>(&cert.order)) {
    out.layers = *l;
  } else {
    out.layers = influence_layers(geo, cert.successor);
  }
  return out;
}

}  // namespace mbqc
