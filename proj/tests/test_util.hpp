#pragma once

#include <random>

#include "flow3/orientation.hpp"

// Brute-force oracles, kept independent of the library's search kernels:
// cut enumeration instead of max-flow, direct 2^m orientation sweeps
// instead of the cycle-space coset walk.

namespace testutil {

using namespace flow3;

inline MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline MultiGraph cycle_graph(int n) {
  MultiGraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// Minimum cut size by enumerating every proper vertex bipartition.
inline int brute_edge_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return kInfiniteConnectivity;
  int best = INT32_MAX;
  for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    int cut = 0;
    for (const Edge& e : g.edges()) {
      bool su = e.u < n - 1 && (mask >> e.u & 1);
      bool sv = e.v < n - 1 && (mask >> e.v & 1);
      if (su != sv) ++cut;
    }
    best = std::min(best, cut);
  }
  return best;
}

/// Direct sweep over all 2^m orientations.
inline bool brute_sc_beta_exists(const MultiGraph& g, const Boundary& beta) {
  const int m = g.edge_count();
  if (g.vertex_count() <= 1) return m == 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    Orientation d(m);
    for (EdgeId e = 0; e < m; ++e) d.set_tail_is_u(e, mask >> e & 1);
    if (is_beta_orientation(g, d, beta) && is_strongly_connected(g, d)) return true;
  }
  return false;
}

inline int brute_count_mod3_orientations(const MultiGraph& g) {
  const int m = g.edge_count();
  int count = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    Orientation d(m);
    for (EdgeId e = 0; e < m; ++e) d.set_tail_is_u(e, mask >> e & 1);
    if (is_mod3_orientation(g, d)) ++count;
  }
  return count;
}

/// Uniform random multigraph: m edges over random distinct endpoint pairs.
inline MultiGraph random_multigraph(int n, int m, std::mt19937_64& rng) {
  MultiGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int u = pick(rng), v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_edge(u, v);
  }
  return g;
}

inline MultiGraph random_connected_multigraph(int n, int m, std::mt19937_64& rng) {
  for (;;) {
    MultiGraph g = random_multigraph(n, m, rng);
    if (g.is_connected()) return g;
  }
}

/// Rejection sampling for 2-edge-connected hosts.
inline MultiGraph random_2ec_multigraph(int n, int m, std::mt19937_64& rng) {
  for (;;) {
    MultiGraph g = random_multigraph(n, m, rng);
    if (g.is_connected() && bridges(g).empty()) return g;
  }
}

/// Complement-pair test instance: contains a complete 4x10 bipartite
/// pattern on vertices {0..3}x{4..13} whose closure absorbs everything
/// except an optional attached 4-cycle on the last four vertices. Both the
/// graph and its complement have minimum degree at least 4, and the graph
/// is 4-edge-connected. Deterministic for a fixed seed.
inline MultiGraph build_pair_instance(int n, uint64_t seed, bool with_leftover) {
  std::mt19937_64 rng(seed);
  const int leftover = with_leftover ? 4 : 0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    MultiGraph g(n);
    for (Vertex x = 0; x < 4; ++x)
      for (Vertex y = 4; y < 14; ++y) g.add_edge(x, y);
    const int core_end = n - leftover;
    for (Vertex v = 14; v < core_end; ++v) {
      std::vector<Vertex> targets;
      while (static_cast<int>(targets.size()) < 4) {
        Vertex t = static_cast<Vertex>(rng() % v);
        if (std::find(targets.begin(), targets.end(), t) == targets.end())
          targets.push_back(t);
      }
      for (Vertex t : targets) g.add_edge(v, t);
    }
    if (leftover == 4) {
      for (int i = 0; i < 4; ++i)
        g.add_edge(core_end + i, core_end + (i + 1) % 4);
      for (int i = 0; i < 4; ++i) {
        std::vector<Vertex> targets;
        while (static_cast<int>(targets.size()) < 2) {
          Vertex t = static_cast<Vertex>(rng() % core_end);
          if (std::find(targets.begin(), targets.end(), t) == targets.end())
            targets.push_back(t);
        }
        for (Vertex t : targets) g.add_edge(core_end + i, t);
      }
    }
    bool degree_ok = true;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) > n - 5 || g.degree(v) < 4) degree_ok = false;
    if (!degree_ok) continue;
    if (edge_connectivity(g) < 4) continue;
    return g;
  }
  throw std::runtime_error("pair instance construction did not converge");
}

/// Multiset of arcs under a vertex permutation matches the other's.
inline bool digraphs_isomorphic(const MultiGraph& g, const Orientation& a,
                                const Orientation& b) {
  const int n = g.vertex_count();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  auto arc_counts = [&](const Orientation& d, const std::vector<Vertex>& p) {
    std::vector<int> counts(n * n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      ++counts[p[d.tail(g, e)] * n + p[d.head(g, e)]];
    return counts;
  };
  std::vector<int> want = arc_counts(b, perm);
  do {
    if (arc_counts(a, perm) == want) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace testutil
