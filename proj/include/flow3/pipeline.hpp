#pragma once

#include "flow3/certificate.hpp"

namespace flow3 {

enum class VerifyCode {
  ok,
  input_error,
  digest_mismatch,
  beta_invalid,
  orientation_invalid,
  structure_missing,
  seed_invalid,
  closure_invalid,
  trace_invalid,
  trace_divergence,
  sc_failure,
  netflow_failure,
  witness_invalid
};

inline const char* verify_code_name(VerifyCode c) {
  switch (c) {
    case VerifyCode::ok: return "ok";
    case VerifyCode::input_error: return "input_error";
    case VerifyCode::digest_mismatch: return "digest_mismatch";
    case VerifyCode::beta_invalid: return "beta_invalid";
    case VerifyCode::orientation_invalid: return "orientation_invalid";
    case VerifyCode::structure_missing: return "structure_missing";
    case VerifyCode::seed_invalid: return "seed_invalid";
    case VerifyCode::closure_invalid: return "closure_invalid";
    case VerifyCode::trace_invalid: return "trace_invalid";
    case VerifyCode::trace_divergence: return "trace_divergence";
    case VerifyCode::sc_failure: return "sc_failure";
    case VerifyCode::netflow_failure: return "netflow_failure";
    case VerifyCode::witness_invalid: return "witness_invalid";
  }
  return "?";
}

struct VerifyResult {
  bool ok = false;
  VerifyCode code = VerifyCode::input_error;
  std::string detail;
};

namespace detail {

struct ReplayFailure {
  VerifyCode code;
  std::string detail;
};

// Re-executes a closure-chain trace deterministically: no search happens,
// every lift is a pure function of the payloads. Returns the final
// orientation; throws ReplayFailure on any mismatch.
inline Orientation replay_trace(const MultiGraph& side, const Certificate& cert,
                                const Boundary& beta) {
  if (!cert.seed) throw ReplayFailure{VerifyCode::structure_missing, "no seed"};
  if (cert.trace.size() < 2 ||
      cert.trace.front().kind != ReductionStep::Kind::remainder ||
      cert.trace.back().kind != ReductionStep::Kind::s3_contract)
    throw ReplayFailure{VerifyCode::trace_invalid,
                        "trace must run remainder..s3_contract"};
  ClosureSequence seq;
  std::vector<Vertex> base_list = cert.trace.back().vertices;
  seq.base = VertexSet(base_list);
  if (seq.base.size() != static_cast<int>(base_list.size()))
    throw ReplayFailure{VerifyCode::trace_invalid, "base vertices repeat"};
  for (size_t i = cert.trace.size() - 1; i-- > 1;) {
    const ReductionStep& st = cert.trace[i];
    if (st.kind != ReductionStep::Kind::parallel_contract || st.vertices.size() != 1)
      throw ReplayFailure{VerifyCode::trace_invalid, "unexpected interior step"};
    seq.order.push_back(st.vertices[0]);
  }
  seq.closure = seq.base;
  for (Vertex v : seq.order) seq.closure.insert(v);

  std::shared_ptr<const OrientationProvider> provider;
  try {
    provider = provider_from_seed(*cert.seed, side);
  } catch (const std::exception& e) {
    throw ReplayFailure{VerifyCode::seed_invalid, e.what()};
  }

  try {
    ContractionResult cr = contract(side, seq.closure);
    ArcList arcs(cert.trace.front().arcs.begin(), cert.trace.front().arcs.end());
    Orientation d0 = arcs_to_orientation(cr.graph, arcs);
    if (orientation_digest(cr.graph, d0) != cert.trace.front().post_digest)
      throw ReplayFailure{VerifyCode::trace_divergence, "remainder digest mismatch"};
    std::vector<ReductionStep> replayed;
    Orientation d = lift_closure_chain(side, seq, *provider, cert.seed->emb, beta, d0,
                                       &replayed);
    if (replayed.size() + 1 != cert.trace.size())
      throw ReplayFailure{VerifyCode::trace_divergence, "step count mismatch"};
    for (size_t i = 0; i < replayed.size(); ++i)
      if (replayed[i].post_digest != cert.trace[i + 1].post_digest)
        throw ReplayFailure{VerifyCode::trace_divergence,
                            "digest mismatch at step " + std::to_string(i + 1)};
    return d;
  } catch (const ReplayFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw ReplayFailure{VerifyCode::trace_invalid, e.what()};
  }
}

}  // namespace detail

/// Checks a certificate against the graph it references, re-deriving every
/// claimed fact without running any search: digests, boundary shape, trace
/// replay, strong connectivity, netflows, and witness arithmetic.
inline VerifyResult verify_certificate(const Certificate& cert, const MultiGraph& g) {
  auto fail = [](VerifyCode c, const std::string& d) {
    return VerifyResult{false, c, d};
  };
  if (graph_digest(g) != cert.graph_digest)
    return fail(VerifyCode::digest_mismatch, "certificate references another graph");
  if (cert.claim == Claim::inconclusive)
    return {true, VerifyCode::ok, "inconclusive certificate makes no claim"};

  if (cert.claim == Claim::not_s3_witness) {
    if (!cert.witness) return fail(VerifyCode::witness_invalid, "witness data missing");
    const WitnessData& w = *cert.witness;
    VertexSet gamma(w.gamma);
    const int s = gamma.size();
    if (s != static_cast<int>(w.gamma.size()) || s < 3 || s > 6)
      return fail(VerifyCode::witness_invalid, "attachment must have 3..6 distinct vertices");
    for (Vertex v : gamma)
      if (v < 0 || v >= g.vertex_count())
        return fail(VerifyCode::witness_invalid, "attachment vertex out of range");
    int e_in = 0, e_out = 0;
    for (const Edge& e : g.edges()) {
      bool iu = gamma.contains(e.u), iv = gamma.contains(e.v);
      if (iu && iv) ++e_in;
      else if (iu || iv) ++e_out;
    }
    if (e_in != w.gamma_edges || e_out != w.out_edges)
      return fail(VerifyCode::witness_invalid, "edge counts do not match the graph");
    if (e_out > 3 * s - e_in)
      return fail(VerifyCode::witness_invalid, "attachment bound not met");
    if (w.contracted_vertices != s + 1 || w.contracted_edges != e_in + e_out ||
        w.bound != 3 * (s + 1) - 2 || !(w.contracted_edges < w.bound))
      return fail(VerifyCode::witness_invalid, "contraction arithmetic is wrong");
    return {true, VerifyCode::ok, "attachment verified"};
  }

  // positive claims
  MultiGraph side;
  try {
    side = claim_about_complement(cert.claim) ? complement(g) : g;
  } catch (const std::exception& e) {
    return fail(VerifyCode::input_error, e.what());
  }
  const int n = side.vertex_count();
  if (!cert.beta || static_cast<int>(cert.beta->size()) != n)
    return fail(VerifyCode::beta_invalid, "boundary missing or wrong size");
  Boundary beta(n);
  try {
    for (Vertex v = 0; v < n; ++v) beta.set(v, (*cert.beta)[v]);
  } catch (const std::exception&) {
    return fail(VerifyCode::beta_invalid, "boundary values out of range");
  }
  if (!beta.valid()) return fail(VerifyCode::beta_invalid, "boundary sum not 0 mod 3");
  const bool is_phi = cert.claim == Claim::phi_lt_3_G || cert.claim == Claim::phi_lt_3_Gc;
  if (is_phi)
    for (Vertex v = 0; v < n; ++v)
      if (beta[v] != 0)
        return fail(VerifyCode::beta_invalid, "flow-index claims need the zero boundary");
  if (!cert.orientation) return fail(VerifyCode::orientation_invalid, "orientation missing");
  Orientation d;
  try {
    d = arcs_to_orientation(side, *cert.orientation);
  } catch (const std::exception& e) {
    return fail(VerifyCode::orientation_invalid, e.what());
  }

  const bool is_s3_claim = cert.claim == Claim::s3_G || cert.claim == Claim::s3_Gc;
  if (is_s3_claim && !cert.witness_table.empty()) {
    // exhaustive evidence: one verified orientation per canonical boundary
    if (cert.witness_table.size() != Boundary::count(n))
      return fail(VerifyCode::witness_invalid, "witness table incomplete");
    for (uint64_t i = 0; i < cert.witness_table.size(); ++i) {
      Boundary bi = Boundary::from_index(n, i);
      const auto& [bvals, arcs] = cert.witness_table[i];
      if (bvals != bi.values())
        return fail(VerifyCode::witness_invalid, "witness table boundary out of order");
      try {
        Orientation di = arcs_to_orientation(side, arcs);
        if (!is_strongly_connected(side, di) || !is_beta_orientation(side, di, bi))
          return fail(VerifyCode::witness_invalid,
                      "witness entry " + std::to_string(i) + " fails its checks");
      } catch (const std::exception& e) {
        return fail(VerifyCode::witness_invalid, e.what());
      }
    }
  } else if (is_s3_claim || !cert.trace.empty()) {
    // structural evidence is mandatory for membership claims and is checked
    // whenever present on flow-index claims
    if (!cert.seed)
      return fail(VerifyCode::structure_missing, "membership claim without evidence");
    if (is_s3_claim) {
      if (edge_connectivity(side) < 4)
        return fail(VerifyCode::closure_invalid,
                    "membership via closure needs a 4-edge-connected host");
    }
    try {
      Orientation replayed = detail::replay_trace(side, cert, beta);
      if (is_s3_claim) {
        // the chain must absorb every vertex for a whole-graph claim
        VertexSet closure = VertexSet(cert.trace.back().vertices);
        for (size_t i = cert.trace.size() - 1; i-- > 1;)
          closure.insert(cert.trace[i].vertices.at(0));
        if (closure.size() != n)
          return fail(VerifyCode::closure_invalid, "closure does not cover the graph");
      }
      if (!(replayed == d))
        return fail(VerifyCode::trace_divergence,
                    "replayed orientation differs from the certified one");
    } catch (const detail::ReplayFailure& f) {
      return fail(f.code, f.detail);
    }
  }

  if (!is_beta_orientation(side, d, beta))
    return fail(VerifyCode::netflow_failure, "netflows do not realize the boundary");
  if (!is_strongly_connected(side, d))
    return fail(VerifyCode::sc_failure, "orientation is not strongly connected");
  return {true, VerifyCode::ok, "certificate verified"};
}

// ---- attachment detection ----

struct BadAttachment {
  VertexSet gamma;
  int internal_edges = 0;
  int out_edges = 0;
};

/// All induced subgraphs on 3..6 vertices with at most 3|V|-|E| edges to
/// the rest, in (size, lexicographic) order. Degree-sum pruning only;
/// guarded against large inputs unless the caller forces it.
inline std::vector<BadAttachment> detect_bad_attachments(const MultiGraph& g,
                                                         bool allow_large = false) {
  const int n = g.vertex_count();
  if (n > 40 && !allow_large)
    throw std::invalid_argument("attachment scan over 40 vertices needs the force flag");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<BadAttachment> out;
  std::vector<Vertex> pick;
  for (int s = 3; s <= 6 && s <= n; ++s) {
    // a hit needs e_out <= 3s - e_in with e_in <= sumdeg/2, so sumdeg <= 6s
    const int cap = 6 * s;
    pick.clear();
    std::function<void(int, int)> rec = [&](int from, int sumdeg) {
      if (sumdeg > cap) return;
      if (static_cast<int>(pick.size()) == s) {
        int e_in = 0;
        for (size_t i = 0; i < pick.size(); ++i)
          for (size_t j = i + 1; j < pick.size(); ++j) e_in += mult[pick[i]][pick[j]];
        int e_out = sumdeg - 2 * e_in;
        if (e_out <= 3 * s - e_in) {
          BadAttachment a;
          a.gamma = VertexSet(pick);
          a.internal_edges = e_in;
          a.out_edges = e_out;
          out.push_back(a);
        }
        return;
      }
      for (Vertex v = from; v <= n - (s - static_cast<int>(pick.size())); ++v) {
        pick.push_back(v);
        rec(v + 1, sumdeg + deg[v]);
        pick.pop_back();
      }
    };
    rec(0, 0);
  }
  return out;
}

/// Non-membership certificate from a sparse attachment: contracting the
/// rest of the graph leaves |gamma|+1 vertices with too few edges.
inline Certificate not_s3_witness(const MultiGraph& g, const VertexSet& gamma) {
  const int s = gamma.size();
  if (s < 3 || s > 6)
    throw std::invalid_argument("witness: attachment must have 3..6 vertices");
  for (Vertex v : gamma)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("witness: vertex out of range");
  int e_in = 0, e_out = 0;
  for (const Edge& e : g.edges()) {
    bool iu = gamma.contains(e.u), iv = gamma.contains(e.v);
    if (iu && iv) ++e_in;
    else if (iu || iv) ++e_out;
  }
  if (e_out > 3 * s - e_in)
    throw std::invalid_argument("witness: attachment bound not met by this set");
  Certificate cert;
  cert.claim = Claim::not_s3_witness;
  cert.graph_digest = graph_digest(g);
  WitnessData w;
  w.gamma.assign(gamma.begin(), gamma.end());
  w.gamma_edges = e_in;
  w.out_edges = e_out;
  w.contracted_vertices = s + 1;
  w.contracted_edges = e_in + e_out;
  w.bound = 3 * (s + 1) - 2;
  cert.witness = w;
  cert.notes.push_back("contracting the complement of the attachment leaves " +
                       std::to_string(w.contracted_vertices) + " vertices and " +
                       std::to_string(w.contracted_edges) + " edges < " +
                       std::to_string(w.bound));
  return cert;
}

// ---- the complement-pair certifier ----

struct PipelineOptions {
  uint64_t budget = kDefaultBudget;
  int max_bipartite_seeds = 24;
  int max_k3t_seeds = 8;
};

struct ClosureCandidate {
  int side = 0;  // 0 = the graph itself, 1 = its complement
  SeedSpec seed;
  ClosureSequence closure;
};

namespace detail {

inline std::vector<uint64_t> adjacency_row(const MultiGraph& g, Vertex v, int words) {
  std::vector<uint64_t> row(words, 0);
  for (Vertex w : g.neighbors(v)) row[w / 64] |= uint64_t{1} << (w % 64);
  return row;
}

inline int popcount_rows(const std::vector<uint64_t>& row) {
  int c = 0;
  for (uint64_t w : row) c += std::popcount(w);
  return c;
}

}  // namespace detail

/// Heuristic seed search on both sides: complete bipartite 4-by-(>=10)
/// patterns and spanning 3-by-(>=14) patterns, each wrapped in its closure.
/// Best-first by closure size; an under-approximation by construction.
inline std::vector<ClosureCandidate> find_closure_candidates(
    const MultiGraph& g, const MultiGraph& gc, const PipelineOptions& opts = {},
    std::vector<std::string>* notes = nullptr) {
  std::vector<ClosureCandidate> cands;
  auto note = [&](const std::string& s) {
    if (notes) notes->push_back(s);
  };
  for (int side = 0; side <= 1; ++side) {
    const MultiGraph& host = side == 0 ? g : gc;
    const std::string label = side == 0 ? "G" : "Gc";
    const int n = host.vertex_count();
    if (edge_connectivity(host) < 4) {
      note("side " + label + " skipped: not 4-edge-connected");
      continue;
    }
    if (host.edge_count() >= 8 * (n - 1) && n > 1)
      note("side " + label +
           ": density flag |E| >= 8(n-1), a large dense subgraph exists but no "
           "constructive certificate is available for it");
    const int words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v] = detail::adjacency_row(host, v, words);

    // candidate vertex pool: everything for small graphs, top degrees beyond
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    if (n > 80) {
      std::sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) {
        int da = host.degree(a), db = host.degree(b);
        return da != db ? da > db : a < b;
      });
      pool.resize(48);
      std::sort(pool.begin(), pool.end());
      note("side " + label + ": quadruple pool restricted to 48 highest degrees");
    }

    struct Quad {
      int count;
      std::array<Vertex, 4> vs;
      std::vector<uint64_t> common;
    };
    std::vector<Quad> quads;
    const int P = static_cast<int>(pool.size());
    std::vector<uint64_t> inter2(words), inter3(words), inter4(words);
    for (int i = 0; i < P; ++i)
      for (int j = i + 1; j < P; ++j) {
        for (int w = 0; w < words; ++w) inter2[w] = adj[pool[i]][w] & adj[pool[j]][w];
        if (detail::popcount_rows(inter2) < 10) continue;
        for (int k = j + 1; k < P; ++k) {
          for (int w = 0; w < words; ++w) inter3[w] = inter2[w] & adj[pool[k]][w];
          if (detail::popcount_rows(inter3) < 10) continue;
          for (int l = k + 1; l < P; ++l) {
            for (int w = 0; w < words; ++w) inter4[w] = inter3[w] & adj[pool[l]][w];
            std::vector<uint64_t> common = inter4;
            for (Vertex q : {pool[i], pool[j], pool[k], pool[l]})
              common[q / 64] &= ~(uint64_t{1} << (q % 64));
            int cnt = detail::popcount_rows(common);
            if (cnt >= 10)
              quads.push_back({cnt, {pool[i], pool[j], pool[k], pool[l]}, common});
          }
        }
      }
    std::sort(quads.begin(), quads.end(), [](const Quad& a, const Quad& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.vs < b.vs;
    });
    if (static_cast<int>(quads.size()) > opts.max_bipartite_seeds)
      quads.resize(opts.max_bipartite_seeds);
    for (const Quad& q : quads) {
      SeedSpec seed;
      seed.family = "bipartite";
      std::vector<Vertex> bverts;
      for (Vertex v = 0; v < n; ++v)
        if (q.common[v / 64] >> (v % 64) & 1) bverts.push_back(v);
      seed.params = {4, static_cast<int>(bverts.size())};
      seed.emb.vertex_of.assign(q.vs.begin(), q.vs.end());
      for (Vertex v : bverts) seed.emb.vertex_of.push_back(v);
      MultiGraph pattern = detail::complete_bipartite_graph(4, seed.params[1]);
      seed.emb.edge_of = match_edges(pattern, host, seed.emb.vertex_of);
      std::vector<Vertex> all = seed.emb.vertex_of;
      ClosureCandidate cand;
      cand.side = side;
      cand.seed = seed;
      cand.closure = compute_cl3(host, VertexSet(all));
      cands.push_back(std::move(cand));
    }

    // 3-by-(>=14) spanning seeds
    struct Triple {
      int count;
      std::array<Vertex, 3> vs;
      std::vector<uint64_t> common;
    };
    std::vector<Triple> triples;
    for (int i = 0; i < P; ++i)
      for (int j = i + 1; j < P; ++j) {
        for (int w = 0; w < words; ++w) inter2[w] = adj[pool[i]][w] & adj[pool[j]][w];
        if (detail::popcount_rows(inter2) < 14) continue;
        for (int k = j + 1; k < P; ++k) {
          for (int w = 0; w < words; ++w) inter3[w] = inter2[w] & adj[pool[k]][w];
          std::vector<uint64_t> common = inter3;
          for (Vertex q : {pool[i], pool[j], pool[k]})
            common[q / 64] &= ~(uint64_t{1} << (q % 64));
          int cnt = detail::popcount_rows(common);
          if (cnt >= 14) triples.push_back({cnt, {pool[i], pool[j], pool[k]}, common});
        }
      }
    std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.vs < b.vs;
    });
    if (static_cast<int>(triples.size()) > opts.max_k3t_seeds)
      triples.resize(opts.max_k3t_seeds);
    for (const Triple& tr : triples) {
      std::vector<Vertex> members(tr.vs.begin(), tr.vs.end());
      for (Vertex v = 0; v < n; ++v)
        if (tr.common[v / 64] >> (v % 64) & 1) members.push_back(v);
      std::sort(members.begin(), members.end());
      SeedSpec seed;
      seed.family = "k3t_plus";
      seed.emb.vertex_of = members;
      std::vector<Vertex> pos(n, kNoVertex);
      for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<Vertex>(i);
      for (Vertex bv : tr.vs) seed.params.push_back(pos[bv]);
      std::sort(seed.params.begin(), seed.params.end());
      for (EdgeId e = 0; e < host.edge_count(); ++e) {
        const Edge& ed = host.edge(e);
        if (pos[ed.u] != kNoVertex && pos[ed.v] != kNoVertex)
          seed.emb.edge_of.push_back(e);
      }
      ClosureCandidate cand;
      cand.side = side;
      cand.seed = seed;
      cand.closure = compute_cl3(host, VertexSet(members));
      cands.push_back(std::move(cand));
    }
  }

  std::sort(cands.begin(), cands.end(), [](const ClosureCandidate& a,
                                           const ClosureCandidate& b) {
    if (a.closure.closure.size() != b.closure.closure.size())
      return a.closure.closure.size() > b.closure.closure.size();
    if (a.side != b.side) return a.side < b.side;
    return a.seed.emb.vertex_of < b.seed.emb.vertex_of;
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const ClosureCandidate& a, const ClosureCandidate& b) {
                            return a.side == b.side &&
                                   a.closure.closure == b.closure.closure;
                          }),
              cands.end());
  return cands;
}

/// Small-cut shortcut: a cut of size at most 3 on one side makes the other
/// side's crossing pattern an almost-complete bipartite graph whose closure
/// swallows everything. Returns a verified membership certificate for the
/// other side, or nothing if no side has such a cut (or a guard fails,
/// which is noted).
inline std::optional<Certificate> small_cut_shortcut(
    const MultiGraph& g, const MultiGraph& gc, const PipelineOptions& opts = {},
    std::vector<std::string>* notes = nullptr) {
  auto note = [&](const std::string& s) {
    if (notes) notes->push_back(s);
  };
  const int n = g.vertex_count();
  if (n < 26) {
    note("small-cut shortcut needs at least 26 vertices");
    return std::nullopt;
  }
  if (min_degree(g) < 4 || min_degree(gc) < 4) {
    note("small-cut shortcut needs minimum degree 4 on both sides");
    return std::nullopt;
  }
  for (int side = 0; side <= 1; ++side) {
    const MultiGraph& cut_side = side == 0 ? g : gc;
    const MultiGraph& other = side == 0 ? gc : g;
    auto [value, s0] = min_edge_cut(cut_side);
    if (value > 3) continue;
    VertexSet small = s0;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!small.contains(v)) rest.push_back(v);
    VertexSet big(rest);
    if (big.size() < 13) std::swap(small, big);  // want the 13+ block opposite
    if (big.size() < 13) {
      note("small cut found but neither block has 13 vertices");
      continue;
    }
    // complete side of the crossing pattern in the other graph
    std::vector<Vertex> sside(small.begin(), small.end());
    std::vector<Vertex> tside;
    for (Vertex x : big) {
      bool all = true;
      for (Vertex s : sside)
        if (other.multiplicity(x, s) == 0) {
          all = false;
          break;
        }
      if (all) tside.push_back(x);
    }
    if (static_cast<int>(sside.size()) < 4 || static_cast<int>(tside.size()) < 10) {
      note("small cut found but the crossing pattern is too small");
      continue;
    }
    SeedSpec seed;
    seed.family = "bipartite";
    seed.params = {static_cast<int>(sside.size()), static_cast<int>(tside.size())};
    seed.emb.vertex_of = sside;
    for (Vertex v : tside) seed.emb.vertex_of.push_back(v);
    MultiGraph pattern = detail::complete_bipartite_graph(seed.params[0], seed.params[1]);
    seed.emb.edge_of = match_edges(pattern, other, seed.emb.vertex_of);
    std::vector<Vertex> all = seed.emb.vertex_of;
    ClosureSequence seq = compute_cl3(other, VertexSet(all));
    if (seq.closure.size() != n) {
      note("small cut found but the closure does not cover the complement side");
      continue;
    }
    std::shared_ptr<const OrientationProvider> provider;
    try {
      provider = provider_from_seed(seed, other);
    } catch (const std::exception& e) {
      note(std::string("small cut provider failed: ") + e.what());
      continue;
    }
    Certificate cert;
    cert.claim = side == 0 ? Claim::s3_Gc : Claim::s3_G;
    cert.graph_digest = graph_digest(g);
    cert.budget = opts.budget;
    cert.beta = std::vector<uint8_t>(n, 0);
    ContractionResult cr = contract(other, seq.closure);
    Orientation d0(cr.graph.edge_count());
    ReductionStep first;
    first.kind = ReductionStep::Kind::remainder;
    first.post_digest = orientation_digest(cr.graph, d0);
    cert.trace.push_back(first);
    try {
      Orientation d = lift_closure_chain(other, seq, *provider, seed.emb,
                                         Boundary::zero(n), d0, &cert.trace);
      cert.orientation = to_arcs(other, d);
    } catch (const std::exception& e) {
      note(std::string("small cut lift failed: ") + e.what());
      continue;
    }
    cert.seed = seed;
    cert.notes.push_back("side " + std::string(side == 0 ? "G" : "Gc") +
                         " has an edge cut of size " + std::to_string(value) +
                         "; the other side closes over a complete bipartite pattern");
    VerifyResult vr = verify_certificate(cert, g);
    if (!vr.ok) {
      note(std::string("small cut certificate failed verification: ") + vr.detail);
      continue;
    }
    return cert;
  }
  return std::nullopt;
}

/// End-to-end certifier for a simple graph and its complement: small-cut
/// shortcut first, then best-first closure candidates, contracting each and
/// solving the remainder by the exhaustive search. Every emitted positive
/// certificate has already passed the verifier; all failures collapse to an
/// inconclusive certificate carrying diagnostics.
inline Certificate certify_pair(const MultiGraph& g, const PipelineOptions& opts = {}) {
  if (!g.is_simple())
    throw std::invalid_argument("certify-pair: input must be a simple graph");
  const int n = g.vertex_count();
  MultiGraph gc = complement(g);
  std::vector<std::string> notes;
  notes.push_back("n=" + std::to_string(n) + " min_degree(G)=" +
                  std::to_string(min_degree(g)) + " min_degree(Gc)=" +
                  std::to_string(min_degree(gc)));
  if (min_degree(g) < 4 || min_degree(gc) < 4)
    notes.push_back("precondition report: minimum degree below 4 on a side; "
                    "running best-effort");
  if (n < 32) notes.push_back("precondition report: fewer than 32 vertices");

  if (auto cert = small_cut_shortcut(g, gc, opts, &notes)) {
    cert->notes.insert(cert->notes.end(), notes.begin(), notes.end());
    return *cert;
  }

  std::vector<ClosureCandidate> cands = find_closure_candidates(g, gc, opts, &notes);
  notes.push_back(std::to_string(cands.size()) + " closure candidates");
  for (size_t ci = 0; ci < cands.size(); ++ci) {
    const ClosureCandidate& cand = cands[ci];
    const MultiGraph& side = cand.side == 0 ? g : gc;
    const std::string label = cand.side == 0 ? "G" : "Gc";
    ContractionResult cr = contract(side, cand.closure.closure);
    const MultiGraph& rem = cr.graph;
    if (rem.vertex_count() > 5) {
      const int k = rem.edge_count() - rem.vertex_count() + 1;
      uint64_t pw = 1;
      bool within = true;
      for (int i = 0; i < k; ++i) {
        if (pw > opts.budget / 3) {
          within = false;
          break;
        }
        pw *= 3;
      }
      if (!within) {
        notes.push_back("candidate " + std::to_string(ci) + " (" + label +
                        "): remainder too large for the search budget");
        continue;
      }
    }
    SearchOutcome out = phi_lt_3(rem, opts.budget);
    if (!out.found) {
      notes.push_back("candidate " + std::to_string(ci) + " (" + label + "): remainder " +
                      (out.exhaustive ? "has no strongly-connected modulo-3 orientation"
                                      : "search hit the budget"));
      continue;
    }
    std::shared_ptr<const OrientationProvider> provider;
    try {
      provider = provider_from_seed(cand.seed, side);
    } catch (const std::exception& e) {
      notes.push_back("candidate " + std::to_string(ci) + " (" + label +
                      "): provider rejected: " + e.what());
      continue;
    }
    Certificate cert;
    cert.claim = cand.side == 0 ? Claim::phi_lt_3_G : Claim::phi_lt_3_Gc;
    cert.graph_digest = graph_digest(g);
    cert.budget = opts.budget;
    cert.beta = std::vector<uint8_t>(n, 0);
    ReductionStep first;
    first.kind = ReductionStep::Kind::remainder;
    for (const auto& arc : to_arcs(rem, *out.found)) first.arcs.push_back(arc);
    first.post_digest = orientation_digest(rem, *out.found);
    cert.trace.push_back(first);
    try {
      Orientation d = lift_closure_chain(side, cand.closure, *provider, cand.seed.emb,
                                         Boundary::zero(n), *out.found, &cert.trace);
      cert.orientation = to_arcs(side, d);
    } catch (const std::exception& e) {
      notes.push_back("candidate " + std::to_string(ci) + " (" + label +
                      "): lift failed: " + e.what());
      continue;
    }
    cert.seed = cand.seed;
    cert.notes = notes;
    cert.notes.push_back("candidate " + std::to_string(ci) + " (" + label +
                         ") certified: closure of " +
                         std::to_string(cand.closure.closure.size()) +
                         " vertices, remainder on " +
                         std::to_string(rem.vertex_count()));
    VerifyResult vr = verify_certificate(cert, g);
    if (!vr.ok) {
      notes.push_back("candidate " + std::to_string(ci) +
                      " produced an unverifiable certificate (" +
                      verify_code_name(vr.code) + "); skipped");
      continue;
    }
    return cert;
  }

  Certificate cert;
  cert.claim = Claim::inconclusive;
  cert.graph_digest = graph_digest(g);
  cert.budget = opts.budget;
  cert.notes = notes;
  cert.notes.push_back("no candidate produced a verifiable certificate");
  return cert;
}

}  // namespace flow3
