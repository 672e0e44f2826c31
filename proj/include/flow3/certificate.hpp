#pragma once

#include <json.hpp>

#include "flow3/catalog.hpp"

namespace flow3 {

enum class Claim {
  phi_lt_3_G,
  phi_lt_3_Gc,
  s3_G,
  s3_Gc,
  not_s3_witness,
  inconclusive
};

inline const char* claim_name(Claim c) {
  switch (c) {
    case Claim::phi_lt_3_G: return "phi_lt_3_G";
    case Claim::phi_lt_3_Gc: return "phi_lt_3_Gc";
    case Claim::s3_G: return "s3_G";
    case Claim::s3_Gc: return "s3_Gc";
    case Claim::not_s3_witness: return "not_s3_witness";
    case Claim::inconclusive: return "inconclusive";
  }
  return "?";
}

inline Claim claim_from_name(const std::string& s) {
  for (Claim c : {Claim::phi_lt_3_G, Claim::phi_lt_3_Gc, Claim::s3_G, Claim::s3_Gc,
                  Claim::not_s3_witness, Claim::inconclusive})
    if (s == claim_name(c)) return c;
  throw std::invalid_argument("unknown claim: " + s);
}

inline bool claim_positive(Claim c) {
  return c == Claim::phi_lt_3_G || c == Claim::phi_lt_3_Gc || c == Claim::s3_G ||
         c == Claim::s3_Gc;
}

inline bool claim_about_complement(Claim c) {
  return c == Claim::phi_lt_3_Gc || c == Claim::s3_Gc;
}

/// Explicit (edge, tail, head) triples, ascending by edge id.
using ArcList = std::vector<std::array<int, 3>>;

inline ArcList to_arcs(const MultiGraph& g, const Orientation& d) {
  ArcList arcs;
  arcs.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    arcs.push_back({e, d.tail(g, e), d.head(g, e)});
  return arcs;
}

/// Converts explicit arcs back to an orientation, checking that every edge
/// appears exactly once with its own endpoints.
inline Orientation arcs_to_orientation(const MultiGraph& g, const ArcList& arcs) {
  if (static_cast<int>(arcs.size()) != g.edge_count())
    throw std::invalid_argument("arc list does not cover the edge set");
  Orientation d(g.edge_count());
  std::vector<char> seen(g.edge_count(), 0);
  for (const auto& [e, t, h] : arcs) {
    if (e < 0 || e >= g.edge_count() || seen[e])
      throw std::invalid_argument("arc list has a bad or repeated edge index");
    const Edge& ed = g.edge(e);
    if (!((ed.u == t && ed.v == h) || (ed.u == h && ed.v == t)))
      throw std::invalid_argument("arc endpoints do not match the edge");
    seen[e] = 1;
    d.orient(g, e, t);
  }
  return d;
}

/// Identifies a provider-backed subgraph: a family name with parameters and
/// its placement in the host. Families: mk2 (params {m}), k3_1, k3_2,
/// k4_star, bipartite (params {m,n}), k3t_plus (params = provider-label ids
/// of the 3-side; the seed graph is the host subgraph induced by vertex_of).
struct SeedSpec {
  std::string family;
  std::vector<int> params;
  SubgraphEmbedding emb;
};

/// Counts backing a non-membership claim through a sparse attachment.
struct WitnessData {
  std::vector<int> gamma;
  int gamma_edges = 0;
  int out_edges = 0;
  int contracted_vertices = 0;
  int contracted_edges = 0;
  int bound = 0;  // 3(|gamma|+1) - 2, what membership would require
};

struct Certificate {
  Claim claim = Claim::inconclusive;
  std::string graph_digest;
  std::optional<std::vector<uint8_t>> beta;  // on the claimed side's graph
  std::optional<ArcList> orientation;        // final orientation, same side
  std::optional<SeedSpec> seed;
  std::vector<ReductionStep> trace;
  std::optional<WitnessData> witness;
  /// exhaustive evidence for small graphs: one entry per canonical boundary
  std::vector<std::pair<std::vector<uint8_t>, ArcList>> witness_table;
  uint64_t budget = kDefaultBudget;
  std::vector<std::string> notes;
};

inline constexpr const char* kToolVersion = "0.1.0";

// ---- JSON ----

using json = nlohmann::ordered_json;

inline json arcs_to_json(const ArcList& arcs) {
  json a = json::array();
  for (const auto& [e, t, h] : arcs) a.push_back({e, t, h});
  return a;
}

inline ArcList arcs_from_json(const json& a) {
  ArcList arcs;
  for (const auto& row : a) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("arc row must be [edge, tail, head]");
    arcs.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  return arcs;
}

inline json certificate_to_json(const Certificate& cert) {
  json j;
  j["claim"] = claim_name(cert.claim);
  j["graph_digest"] = cert.graph_digest;
  j["beta"] = cert.beta ? json(*cert.beta) : json(nullptr);
  j["orientation"] = cert.orientation ? arcs_to_json(*cert.orientation) : json(nullptr);
  if (cert.seed) {
    json s;
    s["family"] = cert.seed->family;
    s["params"] = cert.seed->params;
    s["vertex_of"] = cert.seed->emb.vertex_of;
    s["edge_of"] = cert.seed->emb.edge_of;
    j["seed"] = s;
  } else {
    j["seed"] = nullptr;
  }
  json steps = json::array();
  for (const ReductionStep& st : cert.trace) {
    json s;
    s["kind"] = reduction_kind_name(st.kind);
    s["vertices"] = st.vertices;
    s["edges"] = st.edges;
    s["arcs"] = arcs_to_json(ArcList(st.arcs.begin(), st.arcs.end()));
    s["post_digest"] = st.post_digest;
    steps.push_back(s);
  }
  j["trace"] = steps;
  if (cert.witness) {
    json w;
    w["gamma"] = cert.witness->gamma;
    w["gamma_edges"] = cert.witness->gamma_edges;
    w["out_edges"] = cert.witness->out_edges;
    w["contracted_vertices"] = cert.witness->contracted_vertices;
    w["contracted_edges"] = cert.witness->contracted_edges;
    w["bound"] = cert.witness->bound;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  json table = json::array();
  for (const auto& [b, arcs] : cert.witness_table) {
    json row;
    row["beta"] = b;
    row["orientation"] = arcs_to_json(arcs);
    table.push_back(row);
  }
  j["witness_table"] = table;
  j["meta"] = {{"tool", "flow3"},
               {"version", kToolVersion},
               {"budget", cert.budget},
               {"notes", cert.notes}};
  return j;
}

inline Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.claim = claim_from_name(j.at("claim").get<std::string>());
  cert.graph_digest = j.at("graph_digest").get<std::string>();
  if (!j.at("beta").is_null()) cert.beta = j["beta"].get<std::vector<uint8_t>>();
  if (!j.at("orientation").is_null()) cert.orientation = arcs_from_json(j["orientation"]);
  if (!j.at("seed").is_null()) {
    SeedSpec s;
    s.family = j["seed"].at("family").get<std::string>();
    s.params = j["seed"].at("params").get<std::vector<int>>();
    s.emb.vertex_of = j["seed"].at("vertex_of").get<std::vector<int>>();
    s.emb.edge_of = j["seed"].at("edge_of").get<std::vector<int>>();
    cert.seed = s;
  }
  for (const auto& sj : j.at("trace")) {
    ReductionStep st;
    std::string kind = sj.at("kind").get<std::string>();
    bool known = false;
    for (auto k : {ReductionStep::Kind::remainder, ReductionStep::Kind::parallel_contract,
                   ReductionStep::Kind::s3_contract, ReductionStep::Kind::edge_contract,
                   ReductionStep::Kind::vertex_split, ReductionStep::Kind::pair_split})
      if (kind == reduction_kind_name(k)) {
        st.kind = k;
        known = true;
      }
    if (!known) throw std::invalid_argument("unknown trace step kind: " + kind);
    st.vertices = sj.at("vertices").get<std::vector<int>>();
    st.edges = sj.at("edges").get<std::vector<int>>();
    for (const auto& arc : arcs_from_json(sj.at("arcs"))) st.arcs.push_back(arc);
    st.post_digest = sj.at("post_digest").get<std::string>();
    cert.trace.push_back(st);
  }
  if (!j.at("witness").is_null()) {
    WitnessData w;
    const json& wj = j["witness"];
    w.gamma = wj.at("gamma").get<std::vector<int>>();
    w.gamma_edges = wj.at("gamma_edges").get<int>();
    w.out_edges = wj.at("out_edges").get<int>();
    w.contracted_vertices = wj.at("contracted_vertices").get<int>();
    w.contracted_edges = wj.at("contracted_edges").get<int>();
    w.bound = wj.at("bound").get<int>();
    cert.witness = w;
  }
  for (const auto& row : j.at("witness_table"))
    cert.witness_table.emplace_back(row.at("beta").get<std::vector<uint8_t>>(),
                                    arcs_from_json(row.at("orientation")));
  if (j.contains("meta")) {
    const json& m = j["meta"];
    if (m.contains("budget")) cert.budget = m["budget"].get<uint64_t>();
    if (m.contains("notes")) cert.notes = m["notes"].get<std::vector<std::string>>();
  }
  return cert;
}

/// Rebuilds the provider a seed spec names and validates its family
/// premise. The host is the claimed side's graph.
inline std::shared_ptr<const OrientationProvider> provider_from_seed(
    const SeedSpec& seed, const MultiGraph& host) {
  if (seed.family == "mk2") {
    if (seed.params.size() != 1 || seed.params[0] < 4)
      throw std::invalid_argument("seed: mk2 needs m >= 4");
    return std::make_shared<detail::Mk2Provider>(seed.params[0]);
  }
  if (seed.family == "k3_1") return std::make_shared<detail::K3Provider>(1);
  if (seed.family == "k3_2") return std::make_shared<detail::K3Provider>(2);
  if (seed.family == "k4_star") return std::make_shared<detail::K4StarProvider>();
  if (seed.family == "bipartite") {
    if (seed.params.size() != 2)
      throw std::invalid_argument("seed: bipartite needs two side sizes");
    const int m = seed.params[0], n = seed.params[1];
    if (std::min(m, n) < 4 || std::max(m, n) < 10)
      throw std::invalid_argument("seed: bipartite sides must be >= 4 and >= 10");
    return std::make_shared<detail::BipartiteProvider>(m, n);
  }
  if (seed.family == "k3t_plus") {
    // the seed graph is the host subgraph induced by vertex_of
    std::vector<Vertex> vs = seed.emb.vertex_of;
    std::vector<Vertex> pos(host.vertex_count(), kNoVertex);
    for (size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] < 0 || vs[i] >= host.vertex_count() || pos[vs[i]] != kNoVertex)
        throw std::invalid_argument("seed: bad induced vertex list");
      pos[vs[i]] = static_cast<Vertex>(i);
    }
    MultiGraph sub(static_cast<int>(vs.size()));
    std::vector<EdgeId> sub_edges;
    for (EdgeId e = 0; e < host.edge_count(); ++e) {
      const Edge& ed = host.edge(e);
      if (pos[ed.u] == kNoVertex || pos[ed.v] == kNoVertex) continue;
      sub.add_edge(pos[ed.u], pos[ed.v]);
      sub_edges.push_back(e);
    }
    if (sub_edges != seed.emb.edge_of)
      throw std::invalid_argument("seed: induced edge list mismatch");
    std::vector<Vertex> three;
    for (int p : seed.params) {
      if (p < 0 || p >= sub.vertex_count())
        throw std::invalid_argument("seed: bad 3-side index");
      three.push_back(p);
    }
    return make_k3t_plus_provider(sub, VertexSet(three));
  }
  throw std::invalid_argument("seed: unknown family " + seed.family);
}

}  // namespace flow3
