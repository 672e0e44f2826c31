#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace flow3 {

using Vertex = int;
using EdgeId = int;

inline constexpr EdgeId kNoEdge = -1;
inline constexpr Vertex kNoVertex = -1;

/// Undirected edge; endpoints are stored as given but never equal.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  bool operator==(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : vs_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : vs_(std::move(vs)) { normalize(); }

  bool contains(Vertex v) const {
    return std::binary_search(vs_.begin(), vs_.end(), v);
  }
  void insert(Vertex v) {
    auto it = std::lower_bound(vs_.begin(), vs_.end(), v);
    if (it == vs_.end() || *it != v) vs_.insert(it, v);
  }
  int size() const { return static_cast<int>(vs_.size()); }
  bool empty() const { return vs_.empty(); }
  auto begin() const { return vs_.begin(); }
  auto end() const { return vs_.end(); }
  const std::vector<Vertex>& items() const { return vs_; }
  Vertex min() const { return vs_.front(); }

  bool operator==(const VertexSet&) const = default;
  bool operator<(const VertexSet& o) const { return vs_ < o.vs_; }

 private:
  void normalize() {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
  }
  std::vector<Vertex> vs_;
};

/// Loopless multigraph over dense vertex ids 0..n-1. Parallel edges are
/// permitted and keep stable, individually addressable indices. Instances
/// are value types; every operation below builds a new graph.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    inc_.resize(n_);
  }

  static MultiGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& es) {
    MultiGraph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  EdgeId add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v});
    inc_[u].push_back(id);
    inc_[v].push_back(id);
    return id;
  }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  Vertex other_end(EdgeId e, Vertex w) const {
    const Edge& ed = edges_.at(e);
    if (ed.u == w) return ed.v;
    if (ed.v == w) return ed.u;
    throw std::invalid_argument("vertex not an endpoint of edge");
  }

  bool incident_to(EdgeId e, Vertex w) const {
    const Edge& ed = edges_.at(e);
    return ed.u == w || ed.v == w;
  }

  /// Edge ids incident to v, in increasing id order.
  const std::vector<EdgeId>& incident(Vertex v) const {
    check_vertex(v);
    return inc_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  /// Distinct neighbors of v, sorted ascending.
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (EdgeId e : incident(v)) out.push_back(other_end(e, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  int multiplicity(Vertex u, Vertex v) const {
    check_vertex(v);
    int c = 0;
    for (EdgeId e : incident(u))
      if (other_end(e, u) == v) ++c;
    return c;
  }

  /// Edge ids joining u and v, ascending.
  std::vector<EdgeId> parallel_class(Vertex u, Vertex v) const {
    check_vertex(v);
    std::vector<EdgeId> out;
    for (EdgeId e : incident(u))
      if (other_end(e, u) == v) out.push_back(e);
    return out;
  }

  bool is_simple() const {
    std::vector<std::pair<Vertex, Vertex>> seen;
    seen.reserve(edges_.size());
    for (const Edge& e : edges_)
      seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }

  /// Connectivity over all vertices; isolated vertices disconnect the graph.
  bool is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : inc_[x]) {
        Vertex y = other_end(e, x);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == n_;
  }

  bool operator==(const MultiGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> inc_;
};

/// Result of contracting a vertex set into its minimum member.
/// vertex_map[old] gives the new id for every old vertex; edge_map[old] is
/// kNoEdge exactly for the deleted internal edges. Surviving edges keep
/// their relative order, so contracting A then B equals contracting A∪B
/// bit-for-bit.
struct ContractionResult {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
  Vertex merged = kNoVertex;  // id of the contracted vertex in the new graph
};

inline ContractionResult contract(const MultiGraph& g, const VertexSet& a) {
  if (a.empty()) throw std::invalid_argument("contract: empty vertex set");
  for (Vertex v : a)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("contract: vertex id out of range");

  const int n = g.vertex_count();
  const Vertex rep = a.min();
  ContractionResult res;
  res.vertex_map.assign(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (a.contains(v) && v != rep) continue;
    res.vertex_map[v] = next++;
  }
  for (Vertex v : a) res.vertex_map[v] = res.vertex_map[rep];
  res.merged = res.vertex_map[rep];

  res.graph = MultiGraph(next);
  res.edge_map.assign(g.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    bool iu = a.contains(ed.u), iv = a.contains(ed.v);
    if (iu && iv) continue;  // becomes a loop
    res.edge_map[e] = res.graph.add_edge(res.vertex_map[ed.u], res.vertex_map[ed.v]);
  }
  return res;
}

/// Complement of a simple graph; edges ordered lexicographically.
inline MultiGraph complement(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("complement: undefined for parallel edges");
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  MultiGraph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adj[u][v]) out.add_edge(u, v);
  return out;
}

/// Result of deleting a vertex and adding one replacement edge.
/// All edges formerly incident to the vertex are recorded in `consumed`;
/// `via_a`/`via_b` are the two designated copies the new edge stands for.
struct SplitResult {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;  // old -> new, kNoVertex for the deleted one
  std::vector<EdgeId> edge_map;    // old -> new, kNoEdge for consumed edges
  EdgeId new_edge = kNoEdge;       // appended last
  std::vector<EdgeId> consumed;    // old ids of all deleted incident edges
  EdgeId via_a = kNoEdge;          // old id of the designated edge to a
  EdgeId via_b = kNoEdge;          // old id of the designated edge to b
};

inline SplitResult delete_vertex_add_edge_ids(const MultiGraph& g, Vertex v, EdgeId ea,
                                              EdgeId eb) {
  if (ea == eb) throw std::invalid_argument("split: designated edges must differ");
  if (!g.incident_to(ea, v) || !g.incident_to(eb, v))
    throw std::invalid_argument("split: designated edges must touch the deleted vertex");
  const Vertex a = g.other_end(ea, v);
  const Vertex b = g.other_end(eb, v);
  if (a == b) throw std::invalid_argument("split: replacement edge would be a loop");

  const int n = g.vertex_count();
  SplitResult res;
  res.vertex_map.assign(n, kNoVertex);
  Vertex next = 0;
  for (Vertex w = 0; w < n; ++w)
    if (w != v) res.vertex_map[w] = next++;
  res.graph = MultiGraph(next);
  res.edge_map.assign(g.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == v || ed.v == v) {
      res.consumed.push_back(e);
      continue;
    }
    res.edge_map[e] = res.graph.add_edge(res.vertex_map[ed.u], res.vertex_map[ed.v]);
  }
  res.new_edge = res.graph.add_edge(res.vertex_map[a], res.vertex_map[b]);
  res.via_a = ea;
  res.via_b = eb;
  return res;
}

/// Convenience overload: designates the lowest-id copies of va and vb.
inline SplitResult delete_vertex_add_edge(const MultiGraph& g, Vertex v, Vertex a,
                                          Vertex b) {
  if (a == b) throw std::invalid_argument("split: replacement edge would be a loop");
  EdgeId ea = kNoEdge, eb = kNoEdge;
  for (EdgeId e : g.incident(v)) {
    Vertex w = g.other_end(e, v);
    if (w == a && ea == kNoEdge) ea = e;
    else if (w == b && eb == kNoEdge) eb = e;
  }
  if (ea == kNoEdge || eb == kNoEdge)
    throw std::invalid_argument("split: missing incident edge to a designated endpoint");
  return delete_vertex_add_edge_ids(g, v, ea, eb);
}

inline int cross_edge_count(const MultiGraph& g, const VertexSet& x, const VertexSet& y) {
  for (Vertex v : x)
    if (y.contains(v)) throw std::invalid_argument("cross_edge_count: sets overlap");
  int c = 0;
  for (const Edge& e : g.edges()) {
    bool xu = x.contains(e.u), xv = x.contains(e.v);
    bool yu = y.contains(e.u), yv = y.contains(e.v);
    if ((xu && yv) || (xv && yu)) ++c;
  }
  return c;
}

inline int min_degree(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int d = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline constexpr int kInfiniteConnectivity = std::numeric_limits<int>::max();

namespace detail {

// Max-flow between s and t over the pairwise multiplicity matrix
// (BFS augmenting paths; graphs here are small).
inline int max_flow(std::vector<std::vector<int>> cap, Vertex s, Vertex t) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  for (;;) {
    std::vector<Vertex> parent(n, kNoVertex);
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty() && parent[t] == kNoVertex) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y = 0; y < n; ++y)
        if (parent[y] == kNoVertex && cap[x][y] > 0) {
          parent[y] = x;
          q.push(y);
        }
    }
    if (parent[t] == kNoVertex) return flow;
    int aug = std::numeric_limits<int>::max();
    for (Vertex y = t; y != s; y = parent[y]) aug = std::min(aug, cap[parent[y]][y]);
    for (Vertex y = t; y != s; y = parent[y]) {
      cap[parent[y]][y] -= aug;
      cap[y][parent[y]] += aug;
    }
    flow += aug;
  }
}

inline std::vector<std::vector<int>> capacity_matrix(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++cap[e.u][e.v];
    ++cap[e.v][e.u];
  }
  return cap;
}

}  // namespace detail

/// Global edge connectivity via max-flow from vertex 0 to every other
/// vertex. Returns 0 for disconnected graphs and kInfiniteConnectivity for
/// graphs with fewer than two vertices.
inline int edge_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return kInfiniteConnectivity;
  auto cap = detail::capacity_matrix(g);
  int best = std::numeric_limits<int>::max();
  for (Vertex t = 1; t < n && best > 0; ++t)
    best = std::min(best, detail::max_flow(cap, 0, t));
  return best;
}

/// Smallest edge cut together with the source side containing vertex 0.
inline std::pair<int, VertexSet> min_edge_cut(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return {kInfiniteConnectivity, VertexSet{}};
  auto cap = detail::capacity_matrix(g);
  int best = std::numeric_limits<int>::max();
  Vertex best_t = 1;
  for (Vertex t = 1; t < n; ++t) {
    int f = detail::max_flow(cap, 0, t);
    if (f < best) {
      best = f;
      best_t = t;
    }
  }
  // Re-run the best sink and read the source side off the residual graph.
  auto residual = cap;
  {
    // inline max-flow that leaves the residual matrix behind
    for (;;) {
      std::vector<Vertex> parent(n, kNoVertex);
      parent[0] = 0;
      std::queue<Vertex> q;
      q.push(0);
      while (!q.empty() && parent[best_t] == kNoVertex) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y = 0; y < n; ++y)
          if (parent[y] == kNoVertex && residual[x][y] > 0) {
            parent[y] = x;
            q.push(y);
          }
      }
      if (parent[best_t] == kNoVertex) break;
      int aug = std::numeric_limits<int>::max();
      for (Vertex y = best_t; y != 0; y = parent[y])
        aug = std::min(aug, residual[parent[y]][y]);
      for (Vertex y = best_t; y != 0; y = parent[y]) {
        residual[parent[y]][y] -= aug;
        residual[y][parent[y]] += aug;
      }
    }
  }
  std::vector<char> side(n, 0);
  side[0] = 1;
  std::vector<Vertex> stack = {0};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y = 0; y < n; ++y)
      if (!side[y] && residual[x][y] > 0) {
        side[y] = 1;
        stack.push_back(y);
      }
  }
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v)
    if (side[v]) s.push_back(v);
  return {best, VertexSet(std::move(s))};
}

/// Bridge edges (cut edges), ascending by id. Parallel edges are never
/// bridges; only singleton parallel classes can be.
inline std::vector<EdgeId> bridges(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<EdgeId> out;
  if (n == 0) return out;
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  // iterative DFS; parallel edges handled by skipping only the entry edge id
  struct Frame {
    Vertex v;
    EdgeId via;
    size_t idx;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNoEdge, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.idx < inc.size()) {
        EdgeId e = inc[f.idx++];
        if (e == f.via) continue;
        Vertex w = g.other_end(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flow3
