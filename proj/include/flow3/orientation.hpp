#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>

#include "flow3/multigraph.hpp"

namespace flow3 {

/// Direction assignment covering every edge of a host graph: for each edge
/// the flag selects which stored endpoint acts as the tail.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int edge_count, bool tail_is_u = true)
      : dir_(edge_count, tail_is_u ? 1 : 0) {}

  int size() const { return static_cast<int>(dir_.size()); }
  bool tail_is_u(EdgeId e) const { return dir_.at(e) != 0; }
  void set_tail_is_u(EdgeId e, bool b) { dir_.at(e) = b ? 1 : 0; }

  Vertex tail(const MultiGraph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return tail_is_u(e) ? ed.u : ed.v;
  }
  Vertex head(const MultiGraph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return tail_is_u(e) ? ed.v : ed.u;
  }
  /// Makes `t` the tail of edge e; t must be an endpoint.
  void orient(const MultiGraph& g, EdgeId e, Vertex t) {
    const Edge& ed = g.edge(e);
    if (ed.u == t) dir_.at(e) = 1;
    else if (ed.v == t) dir_.at(e) = 0;
    else throw std::invalid_argument("orient: vertex not an endpoint");
  }
  void flip(EdgeId e) { dir_.at(e) ^= 1; }

  bool operator==(const Orientation&) const = default;

 private:
  std::vector<uint8_t> dir_;
};

/// Vertex labelling into {0,1,2} whose total is 0 mod 3.
class Boundary {
 public:
  Boundary() = default;
  explicit Boundary(int n) : vals_(n, 0) {}
  static Boundary zero(int n) { return Boundary(n); }

  int size() const { return static_cast<int>(vals_.size()); }
  int operator[](Vertex v) const { return vals_.at(v); }
  void set(Vertex v, int val) {
    if (val < 0 || val > 2) throw std::invalid_argument("boundary value not in {0,1,2}");
    vals_.at(v) = static_cast<uint8_t>(val);
  }
  bool valid() const {
    int s = 0;
    for (uint8_t v : vals_) s += v;
    return s % 3 == 0;
  }
  const std::vector<uint8_t>& values() const { return vals_; }

  /// Number of distinct valid boundaries on n vertices: 3^(n-1).
  static uint64_t count(int n) {
    uint64_t c = 1;
    for (int i = 1; i < n; ++i) c *= 3;
    return c;
  }

  /// Canonical enumeration: index digits in base 3 assign vertices
  /// 0..n-2 (vertex 0 fastest), the last vertex value is forced.
  static Boundary from_index(int n, uint64_t idx) {
    Boundary b(n);
    int sum = 0;
    for (Vertex v = 0; v + 1 < n; ++v) {
      int d = static_cast<int>(idx % 3);
      idx /= 3;
      b.vals_[v] = static_cast<uint8_t>(d);
      sum += d;
    }
    if (n > 0) b.vals_[n - 1] = static_cast<uint8_t>((3 - sum % 3) % 3);
    return b;
  }

  bool operator==(const Boundary&) const = default;

 private:
  std::vector<uint8_t> vals_;
};

/// Outdegree minus indegree at v.
inline int netflow(const MultiGraph& g, const Orientation& d, Vertex v) {
  int s = 0;
  for (EdgeId e : g.incident(v)) s += (d.tail(g, e) == v) ? 1 : -1;
  return s;
}

inline bool is_beta_orientation(const MultiGraph& g, const Orientation& d,
                                const Boundary& beta) {
  if (d.size() != g.edge_count() || beta.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (((netflow(g, d, v) - beta[v]) % 3 + 3) % 3 != 0) return false;
  return true;
}

inline bool is_mod3_orientation(const MultiGraph& g, const Orientation& d) {
  return is_beta_orientation(g, d, Boundary::zero(g.vertex_count()));
}

/// Tarjan strong connectivity: true iff the oriented graph has a single
/// strongly connected component covering every vertex. Graphs with fewer
/// than two vertices count as strongly connected.
inline bool is_strongly_connected(const MultiGraph& g, const Orientation& d) {
  const int n = g.vertex_count();
  if (n <= 1) return d.size() == g.edge_count();
  if (d.size() != g.edge_count()) return false;
  std::vector<std::vector<Vertex>> adj(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    adj[d.tail(g, e)].push_back(d.head(g, e));

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> scc_stack;
  int timer = 0, sccs = 0;
  struct Frame {
    Vertex v;
    size_t idx;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < adj[f.v].size()) {
        Vertex w = adj[f.v][f.idx++];
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (low[done.v] == disc[done.v]) {
          ++sccs;
          if (sccs > 1) return false;
          Vertex w;
          do {
            w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = 0;
          } while (w != done.v);
        }
        if (!stack.empty())
          low[stack.back().v] = std::min(low[stack.back().v], low[done.v]);
      }
    }
  }
  return sccs == 1;
}

/// Default search budget: 3^20 nodes.
inline constexpr uint64_t kDefaultBudget = 3486784401ull;

struct SearchOutcome {
  std::optional<Orientation> found;
  uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

namespace detail {

// Netflow constraints over GF(3). Edge values live in {0,1,2}; value 1
// means flow along the stored u->v direction, value 2 against it. The
// solution set of the netflow system is a coset of the cycle space; we fix a
// spanning forest (breadth-first, lowest index first), compute a particular
// solution on the tree edges, and enumerate fundamental-cycle coefficients.
// A complete nowhere-zero assignment corresponds to exactly one orientation.
struct CosetSystem {
  const MultiGraph& g;
  std::vector<EdgeId> parent_edge;       // per vertex, kNoEdge for roots
  std::vector<Vertex> bfs_order;         // discovery order
  std::vector<char> is_tree;             // per edge
  std::vector<EdgeId> nontree;           // digit i <-> nontree[i], ascending
  // cycle i: nontree[i] with coefficient +1 plus signed tree edges
  std::vector<std::vector<std::pair<EdgeId, int8_t>>> cycles;
  std::vector<int> last_digit;           // per tree edge, last cycle touching it
  std::vector<std::vector<EdgeId>> finalize_at;  // digit -> tree edges finalized
  std::vector<uint8_t> x0;               // particular solution
  bool feasible = true;                  // false if a free tree edge is stuck at 0

  CosetSystem(const MultiGraph& graph, const Boundary& beta) : g(graph) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    parent_edge.assign(n, kNoEdge);
    is_tree.assign(m, 0);
    std::vector<int> depth(n, -1);
    std::vector<Vertex> parent(n, kNoVertex);
    bfs_order.reserve(n);
    for (Vertex root = 0; root < n; ++root) {
      if (depth[root] != -1) continue;
      depth[root] = 0;
      bfs_order.push_back(root);
      std::queue<Vertex> q;
      q.push(root);
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (EdgeId e : g.incident(x)) {
          Vertex y = g.other_end(e, x);
          if (depth[y] == -1) {
            depth[y] = depth[x] + 1;
            parent[y] = x;
            parent_edge[y] = e;
            is_tree[e] = 1;
            bfs_order.push_back(y);
            q.push(y);
          }
        }
      }
    }
    for (EdgeId e = 0; e < m; ++e)
      if (!is_tree[e]) nontree.push_back(e);

    // particular solution: nontree edges at 0, tree edges solved leaves-up
    x0.assign(m, 0);
    for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
      Vertex v = *it;
      EdgeId pe = parent_edge[v];
      if (pe == kNoEdge) continue;
      int s = 0;
      for (EdgeId e : g.incident(v)) {
        if (e == pe) continue;
        s += (g.edge(e).u == v) ? x0[e] : -x0[e];
      }
      int sigma = (g.edge(pe).u == v) ? 1 : -1;
      int val = ((beta[v] - s) * sigma) % 3;
      x0[pe] = static_cast<uint8_t>((val % 3 + 3) % 3);
    }

    // fundamental cycles
    cycles.resize(nontree.size());
    last_digit.assign(m, -1);
    for (size_t i = 0; i < nontree.size(); ++i) {
      EdgeId e = nontree[i];
      Vertex a = g.edge(e).u, b = g.edge(e).v;
      // walk b and a up to their meeting point; flow runs a -> e -> b -> tree -> a
      Vertex x = b, y = a;
      std::vector<std::pair<EdgeId, int8_t>>& cyc = cycles[i];
      while (x != y) {
        if (depth[x] >= depth[y]) {
          EdgeId f = parent_edge[x];
          // traversal x -> parent(x)
          cyc.emplace_back(f, g.edge(f).u == x ? 1 : -1);
          x = parent[x];
        } else {
          EdgeId f = parent_edge[y];
          // traversal parent(y) -> y
          cyc.emplace_back(f, g.edge(f).u == y ? -1 : 1);
          y = parent[y];
        }
      }
      for (auto [f, sign] : cyc) last_digit[f] = std::max(last_digit[f], (int)i);
    }
    finalize_at.assign(nontree.size(), {});
    for (EdgeId e = 0; e < m; ++e) {
      if (!is_tree[e]) continue;
      if (last_digit[e] >= 0) finalize_at[last_digit[e]].push_back(e);
      else if (x0[e] == 0) feasible = false;  // no cycle can fix this edge
    }
  }

  // Enumerates complete nowhere-zero assignments in odometer order over the
  // digits (digit 0 most significant, values tried ascending). The visitor
  // returns false to stop early. Returns false if the node budget ran out.
  template <typename Visit>
  bool enumerate(uint64_t budget, uint64_t& nodes, Visit&& visit) const {
    if (!feasible) return true;
    std::vector<uint8_t> x(x0.begin(), x0.end());
    const int k = static_cast<int>(nontree.size());
    if (k == 0) {
      bool zero_free = true;
      for (uint8_t v : x)
        if (v == 0) zero_free = false;
      if (zero_free) visit(x);
      return true;
    }
    std::vector<uint8_t> digit(k, 0);
    bool stopped = false;
    bool in_budget = true;
    // recursive lambda over digit index
    std::function<void(int)> rec = [&](int i) {
      if (stopped || !in_budget) return;
      if (i == k) {
        if (!visit(x)) stopped = true;
        return;
      }
      for (uint8_t val = 1; val <= 2 && !stopped && in_budget; ++val) {
        if (++nodes > budget) {
          in_budget = false;
          break;
        }
        int delta = val - digit[i];
        digit[i] = val;
        x[nontree[i]] = static_cast<uint8_t>((x[nontree[i]] + delta + 6) % 3);
        for (auto [f, sign] : cycles[i])
          x[f] = static_cast<uint8_t>((x[f] + delta * sign + 6) % 3);
        bool ok = true;
        for (EdgeId f : finalize_at[i])
          if (x[f] == 0) ok = false;
        if (ok) rec(i + 1);
      }
      // restore digit to 0 before returning to the caller
      int delta = -digit[i];
      if (delta != 0) {
        x[nontree[i]] = static_cast<uint8_t>((x[nontree[i]] + delta + 6) % 3);
        for (auto [f, sign] : cycles[i])
          x[f] = static_cast<uint8_t>((x[f] + delta * sign + 6) % 3);
        digit[i] = 0;
      }
    };
    rec(0);
    return in_budget;
  }

  Orientation to_orientation(const std::vector<uint8_t>& x) const {
    Orientation d(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) d.set_tail_is_u(e, x[e] == 1);
    return d;
  }
};

// Strong connectivity from an edge-value vector, bitmask reachability for
// hosts with at most 64 vertices.
inline bool sc_from_values(const MultiGraph& g, const std::vector<uint8_t>& x) {
  const int n = g.vertex_count();
  if (n <= 64) {
    std::vector<uint64_t> out(n, 0), in(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      Vertex t = x[e] == 1 ? g.edge(e).u : g.edge(e).v;
      Vertex h = x[e] == 1 ? g.edge(e).v : g.edge(e).u;
      out[t] |= uint64_t{1} << h;
      in[h] |= uint64_t{1} << t;
    }
    auto reach = [&](const std::vector<uint64_t>& step) {
      uint64_t seen = 1, frontier = 1;
      while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= step[v];
        }
        frontier = next & ~seen;
        seen |= next;
      }
      uint64_t all = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
      return seen == all;
    };
    return reach(out) && reach(in);
  }
  Orientation d(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) d.set_tail_is_u(e, x[e] == 1);
  return is_strongly_connected(g, d);
}

}  // namespace detail

inline void check_boundary(const MultiGraph& g, const Boundary& beta) {
  if (beta.size() != g.vertex_count())
    throw std::invalid_argument("boundary size does not match graph");
  if (!beta.valid())
    throw std::invalid_argument("boundary values do not sum to 0 mod 3");
}

/// Searches for a strongly-connected orientation realizing the boundary.
/// Exhaustive within budget: a negative outcome carrying exhaustive=true is
/// a proof that none exists. Disconnected or bridged inputs fail fast.
inline SearchOutcome find_sc_beta_orientation(const MultiGraph& g, const Boundary& beta,
                                              uint64_t budget = kDefaultBudget) {
  check_boundary(g, beta);
  SearchOutcome res;
  const int n = g.vertex_count();
  if (n <= 1) {
    if (g.edge_count() == 0 && (n == 0 || beta[0] == 0)) res.found = Orientation(0);
    res.exhaustive = true;
    return res;
  }
  if (!g.is_connected() || !bridges(g).empty()) {
    res.exhaustive = true;
    return res;
  }
  detail::CosetSystem sys(g, beta);
  bool in_budget = sys.enumerate(budget, res.nodes_explored,
                                 [&](const std::vector<uint8_t>& x) {
                                   if (detail::sc_from_values(g, x)) {
                                     res.found = sys.to_orientation(x);
                                     return false;
                                   }
                                   return true;
                                 });
  res.exhaustive = in_budget || res.found.has_value();
  return res;
}

/// Flow-index-below-3 test: a strongly-connected orientation with all
/// netflows 0 mod 3 exists iff the search finds one. Graphs with an edge
/// cut of size at most 3 are rejected up front: with zero boundary, a cut
/// of size k <= 3 admits no crossing split that is both balanced mod 3 and
/// two-directional.
inline SearchOutcome phi_lt_3(const MultiGraph& g, uint64_t budget = kDefaultBudget) {
  const int n = g.vertex_count();
  if (n >= 2 && edge_connectivity(g) <= 3) {
    SearchOutcome res;
    res.exhaustive = true;
    return res;
  }
  return find_sc_beta_orientation(g, Boundary::zero(n), budget);
}

/// Silent-or-certified density filter: a graph in the strongly-connected
/// contractible family has at least 3n-2 edges, so below that it is
/// certainly outside. Returns false exactly when the bound fails.
inline bool s3_edge_bound_filter(const MultiGraph& g) {
  if (g.vertex_count() <= 1) return true;
  return g.edge_count() >= 3 * g.vertex_count() - 2;
}

enum class Tri { yes, no, inconclusive };

struct S3Result {
  Tri status = Tri::inconclusive;
  /// one witness orientation per canonical boundary index, present on yes
  std::vector<std::pair<Boundary, Orientation>> witnesses;
  std::optional<Boundary> failing_beta;
  uint64_t nodes_explored = 0;

  bool in_s3() const { return status == Tri::yes; }
};

/// Exhaustive membership oracle: checks all 3^(n-1) boundaries. Budget
/// overruns surface as an inconclusive status, never as a wrong answer.
inline S3Result is_s3(const MultiGraph& g, uint64_t budget = kDefaultBudget) {
  S3Result res;
  const int n = g.vertex_count();
  if (n <= 1) {
    // loopless graphs on at most one vertex are edgeless
    res.status = Tri::yes;
    res.witnesses.emplace_back(Boundary::zero(n), Orientation(0));
    return res;
  }
  if (!g.is_connected()) {
    res.status = Tri::no;
    res.failing_beta = Boundary::zero(n);
    return res;
  }
  const uint64_t total = Boundary::count(n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    Boundary beta = Boundary::from_index(n, idx);
    SearchOutcome out = find_sc_beta_orientation(g, beta, budget);
    res.nodes_explored += out.nodes_explored;
    if (out.found) {
      res.witnesses.emplace_back(beta, *out.found);
      continue;
    }
    if (out.exhaustive) {
      res.status = Tri::no;
      res.failing_beta = beta;
      return res;
    }
    res.status = Tri::inconclusive;
    res.failing_beta = beta;
    return res;
  }
  res.status = Tri::yes;
  return res;
}

struct Mod3Enumeration {
  std::vector<Orientation> orientations;
  bool exhaustive = false;
  uint64_t nodes_explored = 0;
};

/// Streams every orientation whose netflows all vanish mod 3, without
/// duplicates, in deterministic odometer order. The callback returns false
/// to stop early.
inline Mod3Enumeration enumerate_mod3_orientations(
    const MultiGraph& g, const std::function<bool(const Orientation&)>& sink,
    uint64_t budget = kDefaultBudget) {
  Mod3Enumeration res;
  detail::CosetSystem sys(g, Boundary::zero(g.vertex_count()));
  bool stopped_by_sink = false;
  bool in_budget = sys.enumerate(budget, res.nodes_explored,
                                 [&](const std::vector<uint8_t>& x) {
                                   if (!sink(sys.to_orientation(x))) {
                                     stopped_by_sink = true;
                                     return false;
                                   }
                                   return true;
                                 });
  res.exhaustive = in_budget && !stopped_by_sink;
  return res;
}

inline Mod3Enumeration enumerate_mod3_orientations(const MultiGraph& g,
                                                   uint64_t budget = kDefaultBudget) {
  Mod3Enumeration res;
  auto collected = enumerate_mod3_orientations(
      g,
      [&](const Orientation& d) {
        res.orientations.push_back(d);
        return true;
      },
      budget);
  res.exhaustive = collected.exhaustive;
  res.nodes_explored = collected.nodes_explored;
  return res;
}

}  // namespace flow3
