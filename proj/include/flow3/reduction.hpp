#pragma once

#include <array>
#include <memory>

#include "flow3/io.hpp"
#include "flow3/multigraph.hpp"
#include "flow3/orientation.hpp"

namespace flow3 {

/// A lift step could not produce a verified orientation. Under the module
/// preconditions this cannot happen, so it signals a violated precondition
/// and is never swallowed.
struct LiftError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A provider or certification pipeline failed to answer a query it is
/// contractually required to answer.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Order in which vertices were absorbed into a closure: each order entry
/// had at least 3 edges into the set built so far.
struct ClosureSequence {
  VertexSet base;
  std::vector<Vertex> order;
  VertexSet closure;
};

/// Greedy saturation from `base`: repeatedly absorb the smallest-id outside
/// vertex with >=3 edges into the current set. The resulting set is
/// order-independent; the recorded order is the deterministic one.
inline ClosureSequence compute_cl3(const MultiGraph& g, const VertexSet& base) {
  if (base.empty()) throw std::invalid_argument("compute_cl3: empty base");
  const int n = g.vertex_count();
  for (Vertex v : base)
    if (v < 0 || v >= n) throw std::invalid_argument("compute_cl3: vertex out of range");
  std::vector<char> in(n, 0);
  std::vector<int> edges_in(n, 0);
  for (Vertex v : base) in[v] = 1;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && !in[e.v]) ++edges_in[e.v];
    if (in[e.v] && !in[e.u]) ++edges_in[e.u];
  }
  ClosureSequence seq;
  seq.base = base;
  for (;;) {
    Vertex pick = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
      if (!in[v] && edges_in[v] >= 3) {
        pick = v;
        break;
      }
    if (pick == kNoVertex) break;
    in[pick] = 1;
    seq.order.push_back(pick);
    for (EdgeId e : g.incident(pick)) {
      Vertex w = g.other_end(e, pick);
      if (!in[w]) ++edges_in[w];
    }
  }
  std::vector<Vertex> cl;
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) cl.push_back(v);
  seq.closure = VertexSet(std::move(cl));
  return seq;
}

/// Placement of a provider's graph inside a host: vertex_of[p] is the host
/// vertex for provider vertex p, edge_of[e] the host edge for provider
/// edge e.
struct SubgraphEmbedding {
  std::vector<Vertex> vertex_of;
  std::vector<EdgeId> edge_of;
};

/// Identity embedding of a graph into itself.
inline SubgraphEmbedding identity_embedding(const MultiGraph& g) {
  SubgraphEmbedding emb;
  emb.vertex_of.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) emb.vertex_of[v] = v;
  emb.edge_of.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) emb.edge_of[e] = e;
  return emb;
}

/// Matches edges of `pattern` to edges of `host` under the given vertex map:
/// the k-th pattern edge on a vertex pair takes the k-th host edge on the
/// image pair. Throws if the host lacks enough parallel copies.
inline std::vector<EdgeId> match_edges(const MultiGraph& pattern, const MultiGraph& host,
                                       const std::vector<Vertex>& vertex_map) {
  std::vector<EdgeId> out(pattern.edge_count(), kNoEdge);
  // occurrence bookkeeping keyed by normalized pair
  std::vector<std::vector<EdgeId>> host_pairs;
  std::vector<std::pair<Vertex, Vertex>> keys;
  auto slot = [&](Vertex a, Vertex b) -> std::vector<EdgeId>& {
    std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
    for (size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == key) return host_pairs[i];
    keys.push_back(key);
    host_pairs.emplace_back();
    return host_pairs.back();
  };
  for (EdgeId e = 0; e < host.edge_count(); ++e)
    slot(host.edge(e).u, host.edge(e).v).push_back(e);
  std::vector<size_t> taken(keys.size(), 0);
  for (EdgeId e = 0; e < pattern.edge_count(); ++e) {
    Vertex a = vertex_map.at(pattern.edge(e).u);
    Vertex b = vertex_map.at(pattern.edge(e).v);
    std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
    bool found = false;
    for (size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] != key) continue;
      if (taken[i] >= host_pairs[i].size())
        throw std::invalid_argument("match_edges: host is missing a parallel copy");
      out[e] = host_pairs[i][taken[i]++];
      found = true;
      break;
    }
    if (!found) throw std::invalid_argument("match_edges: host is missing an edge");
  }
  return out;
}

/// Answers every valid boundary on a fixed graph with a verified
/// strongly-connected orientation realizing it.
class OrientationProvider {
 public:
  virtual ~OrientationProvider() = default;
  virtual const MultiGraph& graph() const = 0;
  virtual Orientation orientation_for(const Boundary& beta) const = 0;
};

/// Boundary induced on a contraction: values add up at the merged vertex.
inline Boundary contracted_boundary(const Boundary& beta, const ContractionResult& cr) {
  Boundary out(cr.graph.vertex_count());
  std::vector<int> acc(cr.graph.vertex_count(), 0);
  for (Vertex v = 0; v < static_cast<int>(cr.vertex_map.size()); ++v)
    acc[cr.vertex_map[v]] += beta[v];
  for (Vertex v = 0; v < cr.graph.vertex_count(); ++v) out.set(v, acc[v] % 3);
  return out;
}

/// Hex digest of an orientation on its host graph.
inline std::string orientation_digest(const MultiGraph& g, const Orientation& d) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << e << " " << d.tail(g, e) << " " << d.head(g, e) << "\n";
  return detail::fnv1a_hex(out.str());
}

/// One invertible reduction in a certificate trace. The payload slots carry
/// whatever the kind needs to replay deterministically.
struct ReductionStep {
  enum class Kind {
    remainder,          // arcs: explicit orientation of the fully contracted graph
    parallel_contract,  // vertices: {absorbed vertex}
    s3_contract,        // vertices: contracted base set (provider attached via seed)
    edge_contract,      // edges: {contracted edge}
    vertex_split,       // vertices: {v, a, b}, edges: {ea, eb}
    pair_split          // vertices: {u, v, a, b}
  };
  Kind kind;
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<std::array<int, 3>> arcs;
  std::string post_digest;
};

inline const char* reduction_kind_name(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::remainder: return "remainder";
    case ReductionStep::Kind::parallel_contract: return "parallel_contract";
    case ReductionStep::Kind::s3_contract: return "s3_contract";
    case ReductionStep::Kind::edge_contract: return "edge_contract";
    case ReductionStep::Kind::vertex_split: return "vertex_split";
    case ReductionStep::Kind::pair_split: return "pair_split";
  }
  return "?";
}

/// Removes edges by id, keeping vertex ids and relative edge order.
struct EdgeDeletionResult {
  MultiGraph graph;
  std::vector<EdgeId> edge_map;  // old -> new, kNoEdge for removed
};

inline EdgeDeletionResult delete_edges(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : ids) drop.at(e) = 1;
  EdgeDeletionResult res;
  res.graph = MultiGraph(g.vertex_count());
  res.edge_map.assign(g.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop[e]) continue;
    res.edge_map[e] = res.graph.add_edge(g.edge(e).u, g.edge(e).v);
  }
  return res;
}

namespace detail {

// Copies directions of surviving edges from an orientation of a contraction
// back onto the big graph. Non-surviving edges are left untouched.
inline void copy_surviving_directions(const MultiGraph& g, const ContractionResult& cr,
                                      const Orientation& dc, Orientation& d) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeId ce = cr.edge_map[e];
    if (ce == kNoEdge) continue;
    Vertex tail_new = dc.tail(cr.graph, ce);
    d.set_tail_is_u(e, cr.vertex_map[g.edge(e).u] == tail_new);
  }
}

}  // namespace detail

/// Extends a strongly-connected orientation of g/e back to g. The edge e
/// and any parallel copies of it receive directions: with two or more
/// copies the first two form a digon (first copy tailed at the lower-id
/// endpoint) and the rest alternate; a single copy is tried lower-id-tail
/// first, then flipped. Requires a 2-edge-connected host; failure of both
/// directions is a precondition violation and throws.
inline Orientation extend_through_edge_contraction(const MultiGraph& g, EdgeId e,
                                                   const Orientation& d_contracted) {
  const Edge& ed = g.edge(e);
  const Vertex lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
  ContractionResult cr = contract(g, VertexSet{ed.u, ed.v});
  if (d_contracted.size() != cr.graph.edge_count())
    throw std::invalid_argument("extend: orientation does not fit g/e");
  Orientation d(g.edge_count());
  detail::copy_surviving_directions(g, cr, d_contracted, d);
  std::vector<EdgeId> cls = g.parallel_class(ed.u, ed.v);
  if (cls.size() >= 2) {
    for (size_t i = 0; i < cls.size(); ++i)
      d.orient(g, cls[i], i % 2 == 0 ? lo : hi);
    if (!is_strongly_connected(g, d))
      throw LiftError("extend: digon extension not strongly connected");
    return d;
  }
  for (Vertex t : {lo, hi}) {
    d.orient(g, e, t);
    if (is_strongly_connected(g, d)) return d;
  }
  throw LiftError("extend: neither direction of the contracted edge works");
}

/// Lifts a strongly-connected boundary orientation of g/E(x,y) back to g,
/// where x and y are joined by at least 3 parallel edges. Two copies are
/// reserved to fix the boundary at x and y after the remaining copies are
/// handled by the edge-contraction extension.
inline Orientation lift_through_parallel_contraction(const MultiGraph& g, Vertex x,
                                                     Vertex y, const Boundary& beta,
                                                     const Orientation& d_contracted) {
  check_boundary(g, beta);
  std::vector<EdgeId> cls = g.parallel_class(x, y);
  if (cls.size() < 3)
    throw std::invalid_argument("parallel lift: fewer than 3 parallel edges");
  ContractionResult cr = contract(g, VertexSet{x, y});
  Boundary beta_c = contracted_boundary(beta, cr);
  if (d_contracted.size() != cr.graph.edge_count() ||
      !is_beta_orientation(cr.graph, d_contracted, beta_c))
    throw std::invalid_argument("parallel lift: boundary mismatch at the merged vertex");
  if (!is_strongly_connected(cr.graph, d_contracted))
    throw std::invalid_argument("parallel lift: contracted orientation not strongly connected");

  const EdgeId e1 = cls[0], e2 = cls[1];
  EdgeDeletionResult del = delete_edges(g, {e1, e2});
  // g minus the reserved copies contracts to the same graph, so the
  // orientation transfers unchanged.
  Orientation d_star =
      extend_through_edge_contraction(del.graph, del.edge_map[cls[2]], d_contracted);

  Orientation d(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (del.edge_map[e] != kNoEdge)
      d.set_tail_is_u(e, d_star.tail(del.graph, del.edge_map[e]) == g.edge(e).u);

  int nx = 0;
  for (EdgeId e : g.incident(x)) {
    if (e == e1 || e == e2) continue;
    nx += (d.tail(g, e) == x) ? 1 : -1;
  }
  int delta = ((beta[x] - nx) % 3 + 3) % 3;  // 0 -> digon, 1 -> both into x, 2 -> both out
  if (delta == 0) {
    d.orient(g, e1, x);
    d.orient(g, e2, y);
  } else if (delta == 1) {
    d.orient(g, e1, y);
    d.orient(g, e2, y);
  } else {
    d.orient(g, e1, x);
    d.orient(g, e2, x);
  }
  if (!is_beta_orientation(g, d, beta) || !is_strongly_connected(g, d))
    throw LiftError("parallel lift: lifted orientation failed verification");
  return d;
}

/// Lifts a strongly-connected boundary orientation of g/h back to g using a
/// provider for the contracted part. Edges inside the contracted set that
/// are not part of the provider's subgraph are directed lower-id-tail and
/// folded into the residual boundary the provider must realize.
inline Orientation lift_through_s3_contraction(const MultiGraph& g,
                                               const VertexSet& h_vertices,
                                               const OrientationProvider& provider,
                                               const SubgraphEmbedding& emb,
                                               const Boundary& beta,
                                               const Orientation& d_contracted) {
  check_boundary(g, beta);
  const MultiGraph& h = provider.graph();
  if (static_cast<int>(emb.vertex_of.size()) != h.vertex_count() ||
      static_cast<int>(emb.edge_of.size()) != h.edge_count())
    throw std::invalid_argument("s3 lift: embedding does not fit the provider graph");
  if (VertexSet(emb.vertex_of) != h_vertices ||
      static_cast<int>(VertexSet(emb.vertex_of).size()) != h.vertex_count())
    throw std::invalid_argument("s3 lift: provider must span the contracted set");
  std::vector<char> is_h_edge(g.edge_count(), 0);
  for (EdgeId pe = 0; pe < h.edge_count(); ++pe) {
    EdgeId he = emb.edge_of[pe];
    Vertex a = emb.vertex_of[h.edge(pe).u], b = emb.vertex_of[h.edge(pe).v];
    const Edge& ge = g.edge(he);
    if (!((ge.u == a && ge.v == b) || (ge.u == b && ge.v == a)))
      throw std::invalid_argument("s3 lift: embedded edge endpoints do not match");
    if (is_h_edge[he]) throw std::invalid_argument("s3 lift: embedded edge reused");
    is_h_edge[he] = 1;
  }

  ContractionResult cr = contract(g, h_vertices);
  Boundary beta_c = contracted_boundary(beta, cr);
  if (d_contracted.size() != cr.graph.edge_count() ||
      !is_beta_orientation(cr.graph, d_contracted, beta_c))
    throw std::invalid_argument("s3 lift: contracted orientation has wrong boundary");
  if (!is_strongly_connected(cr.graph, d_contracted))
    throw std::invalid_argument("s3 lift: contracted orientation not strongly connected");

  Orientation d(g.edge_count());
  detail::copy_surviving_directions(g, cr, d_contracted, d);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (cr.edge_map[e] != kNoEdge || is_h_edge[e]) continue;
    // internal edge outside the provider subgraph
    d.orient(g, e, std::min(g.edge(e).u, g.edge(e).v));
  }

  // residual boundary the provider must realize on its own labels
  Boundary beta2(h.vertex_count());
  for (Vertex pv = 0; pv < h.vertex_count(); ++pv) {
    Vertex v = emb.vertex_of[pv];
    int b1 = 0;
    for (EdgeId e : g.incident(v))
      if (!is_h_edge[e]) b1 += (d.tail(g, e) == v) ? 1 : -1;
    beta2.set(pv, ((beta[v] - b1) % 3 + 3) % 3);
  }
  if (!beta2.valid())
    throw LiftError("s3 lift: residual boundary does not balance");

  Orientation dh = provider.orientation_for(beta2);
  for (EdgeId pe = 0; pe < h.edge_count(); ++pe) {
    Vertex tail_h = emb.vertex_of[dh.tail(h, pe)];
    d.orient(g, emb.edge_of[pe], tail_h);
  }
  if (!is_beta_orientation(g, d, beta) || !is_strongly_connected(g, d))
    throw LiftError("s3 lift: lifted orientation failed verification");
  return d;
}

/// Replays a closure in reverse: one parallel-contraction lift per absorbed
/// vertex, then the provider lift for the base. `d_contracted` orients
/// g/closure. Appends one trace step per lift when `trace` is given.
inline Orientation lift_closure_chain(const MultiGraph& g, const ClosureSequence& seq,
                                      const OrientationProvider& provider,
                                      const SubgraphEmbedding& emb, const Boundary& beta,
                                      const Orientation& d_contracted,
                                      std::vector<ReductionStep>* trace = nullptr) {
  check_boundary(g, beta);
  // validate the sequence against the graph
  VertexSet expect = seq.base;
  for (size_t i = 0; i < seq.order.size(); ++i) {
    Vertex v = seq.order[i];
    if (expect.contains(v))
      throw std::invalid_argument("closure chain: vertex absorbed twice (step " +
                                  std::to_string(i) + ")");
    int cnt = 0;
    for (EdgeId e : g.incident(v))
      if (expect.contains(g.other_end(e, v))) ++cnt;
    if (cnt < 3)
      throw std::invalid_argument("closure chain: vertex has fewer than 3 edges into "
                                  "the set (step " + std::to_string(i) + ")");
    expect.insert(v);
  }
  if (expect != seq.closure)
    throw std::invalid_argument("closure chain: closure set does not match base+order");

  const int t = static_cast<int>(seq.order.size());
  Orientation cur = d_contracted;
  VertexSet cur_set = seq.closure;
  for (int i = t - 1; i >= 0; --i) {
    Vertex vi = seq.order[i];
    VertexSet prev_set = seq.base;
    for (int j = 0; j < i; ++j) prev_set.insert(seq.order[j]);
    ContractionResult host = contract(g, prev_set);
    Boundary beta_host = contracted_boundary(beta, host);
    Vertex x = host.merged;
    Vertex y = host.vertex_map[vi];
    cur = lift_through_parallel_contraction(host.graph, x, y, beta_host, cur);
    if (trace) {
      ReductionStep step;
      step.kind = ReductionStep::Kind::parallel_contract;
      step.vertices = {vi};
      step.post_digest = orientation_digest(host.graph, cur);
      trace->push_back(step);
    }
    cur_set = prev_set;
  }
  Orientation out =
      lift_through_s3_contraction(g, seq.base, provider, emb, beta, cur);
  if (trace) {
    ReductionStep step;
    step.kind = ReductionStep::Kind::s3_contract;
    step.vertices.assign(seq.base.begin(), seq.base.end());
    step.post_digest = orientation_digest(g, out);
    trace->push_back(step);
  }
  return out;
}

/// Deterministic bookkeeping for one vertex split: the non-designated edges
/// at v are pre-directed to make their net contribution at v equal the
/// boundary there (the designated pair contributes net zero as a path), and
/// every pre-directed edge shifts the boundary of its other endpoint.
struct VertexSplitPlan {
  SplitResult split;
  std::vector<std::pair<EdgeId, Vertex>> preoriented;  // (old edge, tail in g)
  Boundary sub_beta;                                   // boundary on split.graph
};

inline VertexSplitPlan plan_vertex_split_ids(const MultiGraph& g, Vertex v, EdgeId ea,
                                             EdgeId eb, const Boundary& beta) {
  check_boundary(g, beta);
  if (g.degree(v) < 4)
    throw std::invalid_argument("vertex split: vertex degree below 4");
  VertexSplitPlan plan;
  plan.split = delete_vertex_add_edge_ids(g, v, ea, eb);
  std::vector<EdgeId> free;
  for (EdgeId e : g.incident(v))
    if (e != ea && e != eb) free.push_back(e);
  const int k = static_cast<int>(free.size());
  int flips = -1;
  for (int j = 0; j <= 2; ++j)
    if (((2 * j - k) % 3 + 3) % 3 == beta[v]) {
      flips = j;
      break;
    }
  if (flips < 0) throw std::logic_error("vertex split: no residue pattern found");
  std::vector<int> adjust(g.vertex_count(), 0);
  for (int i = 0; i < k; ++i) {
    EdgeId e = free[i];
    Vertex x = g.other_end(e, v);
    bool out_of_v = i < flips;
    plan.preoriented.emplace_back(e, out_of_v ? v : x);
    adjust[x] += out_of_v ? 1 : -1;  // into x raises its target, out of x lowers it
  }
  plan.sub_beta = Boundary(plan.split.graph.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w == v) continue;
    plan.sub_beta.set(plan.split.vertex_map[w], ((beta[w] + adjust[w]) % 3 + 3) % 3);
  }
  if (!plan.sub_beta.valid())
    throw std::logic_error("vertex split: adjusted boundary does not balance");
  return plan;
}

inline VertexSplitPlan plan_vertex_split(const MultiGraph& g, Vertex v, Vertex a,
                                         Vertex b, const Boundary& beta) {
  SplitResult probe = delete_vertex_add_edge(g, v, a, b);
  return plan_vertex_split_ids(g, v, probe.via_a, probe.via_b, beta);
}

/// Lifts a strongly-connected orientation of g-v+ab (realizing the adjusted
/// boundary of the deterministic plan) back to a strongly-connected
/// beta-orientation of g: the replacement edge becomes the path a-v-b with
/// direction preserved, pre-directed edges are restored as planned.
inline Orientation lift_vertex_split_ids(const MultiGraph& g, Vertex v, EdgeId ea, EdgeId eb,
                                         const Boundary& beta, const Orientation& sub_solution) {
  VertexSplitPlan plan = plan_vertex_split_ids(g, v, ea, eb, beta);
  const MultiGraph& g1 = plan.split.graph;
  if (sub_solution.size() != g1.edge_count() ||
      !is_beta_orientation(g1, sub_solution, plan.sub_beta))
    throw std::invalid_argument("vertex split: sub-solution boundary bookkeeping mismatch");
  if (!is_strongly_connected(g1, sub_solution))
    throw std::invalid_argument("vertex split: sub-solution not strongly connected");

  Orientation d(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeId ne = plan.split.edge_map[e];
    if (ne == kNoEdge) continue;
    Vertex tail_new = sub_solution.tail(g1, ne);
    d.set_tail_is_u(e, plan.split.vertex_map[g.edge(e).u] == tail_new);
  }
  for (auto [e, tail] : plan.preoriented) d.orient(g, e, tail);
  const Vertex a = g.other_end(ea, v);
  Vertex tail_ab = sub_solution.tail(g1, plan.split.new_edge);
  if (tail_ab == plan.split.vertex_map[a]) {
    d.orient(g, ea, a);  // a -> v -> b
    d.orient(g, eb, v);
  } else {
    d.orient(g, eb, g.other_end(eb, v));  // b -> v -> a
    d.orient(g, ea, v);
  }
  if (!is_beta_orientation(g, d, beta) || !is_strongly_connected(g, d))
    throw LiftError("vertex split: lifted orientation failed verification");
  return d;
}

inline Orientation lift_vertex_split(const MultiGraph& g, Vertex v, Vertex a, Vertex b,
                                     const Boundary& beta, const Orientation& sub_solution) {
  SplitResult probe = delete_vertex_add_edge(g, v, a, b);
  return lift_vertex_split_ids(g, v, probe.via_a, probe.via_b, beta, sub_solution);
}

/// Two-vertex reduction: deletes adjacent u,v and adds one edge ab with
/// a,b outside. The sub-graph and its boundary are derived deterministically
/// so that a solution for them lifts back to g.
struct PairSplitPlan {
  MultiGraph g1;
  Boundary sub_beta;
  bool single_neighbor;  // u's only neighbor is v: parallel-contraction route
};

namespace detail {

struct PairSplitContext {
  bool single_neighbor = false;
  // single-neighbor route
  ContractionResult cp;
  EdgeId ea_c = kNoEdge, eb_c = kNoEdge;
  Boundary beta_c;
  // two-step route
  EdgeId euv = kNoEdge, euc = kNoEdge;
  VertexSplitPlan plan_a;  // split at u in g
  Vertex v_in_h = kNoVertex;
  EdgeId ea_h = kNoEdge, eb_h = kNoEdge;
};

inline PairSplitContext pair_split_context(const MultiGraph& g, Vertex u, Vertex v,
                                           Vertex a, Vertex b, const Boundary& beta,
                                           VertexSplitPlan* final_plan) {
  check_boundary(g, beta);
  if (u == v || a == u || a == v || b == u || b == v || a == b)
    throw std::invalid_argument("pair split: endpoints must be distinct and outside {u,v}");
  if (g.multiplicity(u, v) == 0)
    throw std::invalid_argument("pair split: u and v must be adjacent");
  int outside = 0;
  for (EdgeId e : g.incident(v)) {
    Vertex w = g.other_end(e, v);
    if (w != u) ++outside;
  }
  if (outside < 3)
    throw std::invalid_argument("pair split: v needs 3 edges avoiding u");
  if (edge_connectivity(g) < 4)
    throw std::invalid_argument("pair split: host must be 4-edge-connected");
  EdgeId ea_g = g.parallel_class(v, a).at(0);
  EdgeId eb_g = g.parallel_class(v, b).at(0);

  PairSplitContext ctx;
  std::vector<Vertex> nbrs = g.neighbors(u);
  if (nbrs.size() == 1) {
    ctx.single_neighbor = true;
    ctx.cp = contract(g, VertexSet{u, v});
    ctx.beta_c = contracted_boundary(beta, ctx.cp);
    ctx.ea_c = ctx.cp.edge_map[ea_g];
    ctx.eb_c = ctx.cp.edge_map[eb_g];
    *final_plan = plan_vertex_split_ids(ctx.cp.graph, ctx.cp.merged, ctx.ea_c,
                                        ctx.eb_c, ctx.beta_c);
    return ctx;
  }
  Vertex c = kNoVertex;
  for (Vertex w : nbrs)
    if (w != v) {
      c = w;
      break;
    }
  ctx.euv = g.parallel_class(u, v).at(0);
  ctx.euc = g.parallel_class(u, c).at(0);
  ctx.plan_a = plan_vertex_split_ids(g, u, ctx.euv, ctx.euc, beta);
  const MultiGraph& h = ctx.plan_a.split.graph;
  ctx.v_in_h = ctx.plan_a.split.vertex_map[v];
  ctx.ea_h = ctx.plan_a.split.edge_map[ea_g];
  ctx.eb_h = ctx.plan_a.split.edge_map[eb_g];
  *final_plan =
      plan_vertex_split_ids(h, ctx.v_in_h, ctx.ea_h, ctx.eb_h, ctx.plan_a.sub_beta);
  return ctx;
}

}  // namespace detail

inline PairSplitPlan plan_pair_split(const MultiGraph& g, Vertex u, Vertex v, Vertex a,
                                     Vertex b, const Boundary& beta) {
  VertexSplitPlan final_plan;
  detail::PairSplitContext ctx =
      detail::pair_split_context(g, u, v, a, b, beta, &final_plan);
  PairSplitPlan plan;
  plan.g1 = final_plan.split.graph;
  plan.sub_beta = final_plan.sub_beta;
  plan.single_neighbor = ctx.single_neighbor;
  return plan;
}

inline Orientation lift_pair_split(const MultiGraph& g, Vertex u, Vertex v, Vertex a,
                                   Vertex b, const Boundary& beta,
                                   const Orientation& sub_solution) {
  VertexSplitPlan final_plan;
  detail::PairSplitContext ctx =
      detail::pair_split_context(g, u, v, a, b, beta, &final_plan);
  Orientation d;
  if (ctx.single_neighbor) {
    Orientation d_c = lift_vertex_split_ids(ctx.cp.graph, ctx.cp.merged, ctx.ea_c,
                                            ctx.eb_c, ctx.beta_c, sub_solution);
    d = lift_through_parallel_contraction(g, std::min(u, v), std::max(u, v), beta, d_c);
  } else {
    Orientation d_h = lift_vertex_split_ids(ctx.plan_a.split.graph, ctx.v_in_h, ctx.ea_h,
                                            ctx.eb_h, ctx.plan_a.sub_beta, sub_solution);
    d = lift_vertex_split_ids(g, u, ctx.euv, ctx.euc, beta, d_h);
  }
  if (!is_beta_orientation(g, d, beta) || !is_strongly_connected(g, d))
    throw LiftError("pair split: lifted orientation failed verification");
  return d;
}

}  // namespace flow3
