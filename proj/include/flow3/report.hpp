#pragma once

#include "flow3/pipeline.hpp"

namespace flow3 {

inline std::string beta_csv(const Boundary& b) {
  std::string s;
  for (Vertex v = 0; v < b.size(); ++v) {
    if (v) s += ",";
    s += std::to_string(b[v]);
  }
  return s;
}

inline std::string render_phi_outcome(const SearchOutcome& out,
                                      const std::string& label = "G") {
  if (out.found)
    return "phi(" + label + ") < 3: strongly-connected modulo-3 orientation found";
  if (out.exhaustive)
    return "phi(" + label +
           ") >= 3: no strongly-connected modulo-3 orientation (exhaustive)";
  return "phi(" + label + "): inconclusive, search budget exhausted after " +
         std::to_string(out.nodes_explored) + " nodes";
}

inline std::string render_s3_outcome(const S3Result& res, int n,
                                     const std::string& label = "G") {
  const uint64_t total = Boundary::count(n);
  if (res.status == Tri::yes)
    return "in S3: " + std::to_string(total) + "/" + std::to_string(total) +
           " boundary classes witnessed";
  if (res.status == Tri::no)
    return "not in S3: boundary (" + beta_csv(*res.failing_beta) +
           ") admits no strongly-connected orientation (exhaustive)";
  return "S3 membership of " + label + ": inconclusive, budget exhausted at boundary (" +
         beta_csv(*res.failing_beta) + ")";
}

/// Human-readable certificate summary.
inline std::string render_report(const Certificate& cert, const MultiGraph& g) {
  std::ostringstream out;
  out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
      << " digest=" << graph_digest(g) << "\n";
  out << "min degree: G=" << min_degree(g);
  if (g.is_simple()) out << " Gc=" << min_degree(complement(g));
  out << "\n";
  out << "claim: " << claim_name(cert.claim) << "\n";
  if (cert.witness) {
    const WitnessData& w = *cert.witness;
    out << "attachment: {";
    for (size_t i = 0; i < w.gamma.size(); ++i)
      out << (i ? "," : "") << w.gamma[i];
    out << "} inside=" << w.gamma_edges << " out=" << w.out_edges
        << "; contraction " << w.contracted_vertices << " vertices, "
        << w.contracted_edges << " edges < " << w.bound << "\n";
  }
  if (!cert.witness_table.empty())
    out << "witness table: " << cert.witness_table.size() << " boundary classes\n";
  out << "trace: " << cert.trace.size() << " steps\n";
  VerifyResult vr = verify_certificate(cert, g);
  out << "verification: " << (vr.ok ? "passed" : "FAILED") << " ("
      << verify_code_name(vr.code) << ")\n";
  for (const std::string& n : cert.notes) out << "note: " << n << "\n";
  return out.str();
}

/// DOT rendering of an oriented graph.
inline std::string to_dot(const MultiGraph& g, const Orientation& d) {
  std::ostringstream out;
  out << "digraph flow3 {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "  " << d.tail(g, e) << " -> " << d.head(g, e) << " [label=" << e << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace flow3
