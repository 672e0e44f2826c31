// flow3: decides and certifies the flow-index-below-3 property and
// strongly-connected Z3-contractibility for multigraphs and complement
// pairs. Every positive answer is backed by a machine-checkable
// certificate; `flow3 verify` re-checks one without searching.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "flow3/report.hpp"

namespace {

using namespace flow3;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

MultiGraph load_graph(const std::string& path) {
  if (path == "-") return parse_input(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path, 0);
  return parse_input(in);
}

struct Output {
  std::string path;  // empty: stdout for the primary payload
  bool json = false;
  bool dot = false;

  void emit_certificate(const Certificate& cert, const MultiGraph& side_graph) const {
    if (!path.empty()) {
      std::ofstream out(path);
      out << certificate_to_json(cert).dump(2) << "\n";
    } else if (json) {
      std::cout << certificate_to_json(cert).dump(2) << "\n";
    }
    if (dot && cert.orientation) {
      Orientation d = arcs_to_orientation(side_graph, *cert.orientation);
      std::cout << to_dot(side_graph, d);
    }
  }
};

uint64_t default_budget() {
  if (const char* env = std::getenv("FLOW3_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("FLOW3_BUDGET is not a number");
    }
  }
  return kDefaultBudget;
}

Boundary parse_beta_csv(const std::string& csv, int n) {
  Boundary beta(n);
  std::istringstream in(csv);
  std::string tok;
  int v = 0;
  while (std::getline(in, tok, ',')) {
    if (v >= n) throw std::invalid_argument("boundary has too many values");
    beta.set(v++, std::stoi(tok));
  }
  if (v != n) throw std::invalid_argument("boundary needs one value per vertex");
  if (!beta.valid()) throw std::invalid_argument("boundary values do not sum to 0 mod 3");
  return beta;
}

void print_outcome_line(const std::string& line, bool json_mode) {
  if (json_mode) {
    flow3::json j;
    j["outcome"] = line;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << line << "\n";
  }
}

int cmd_oracle(const std::string& what, const MultiGraph& g, uint64_t budget,
               const Output& out) {
  if (what == "phi") {
    SearchOutcome res = phi_lt_3(g, budget);
    if (res.found) {
      Certificate cert;
      cert.claim = Claim::phi_lt_3_G;
      cert.graph_digest = graph_digest(g);
      cert.budget = budget;
      cert.beta = std::vector<uint8_t>(g.vertex_count(), 0);
      cert.orientation = to_arcs(g, *res.found);
      if (!out.json) std::cout << render_phi_outcome(res) << "\n";
      out.emit_certificate(cert, g);
      return kExitPositive;
    }
    print_outcome_line(render_phi_outcome(res), out.json);
    return res.exhaustive ? kExitNegative : kExitInconclusive;
  }
  // s3 oracle
  S3Result res = is_s3(g, budget);
  if (res.status == Tri::yes) {
    Certificate cert;
    cert.claim = Claim::s3_G;
    cert.graph_digest = graph_digest(g);
    cert.budget = budget;
    cert.beta = std::vector<uint8_t>(g.vertex_count(), 0);
    for (const auto& [beta, d] : res.witnesses)
      cert.witness_table.emplace_back(beta.values(), to_arcs(g, d));
    cert.orientation = cert.witness_table.front().second;
    if (!out.json) std::cout << render_s3_outcome(res, g.vertex_count()) << "\n";
    out.emit_certificate(cert, g);
    return kExitPositive;
  }
  print_outcome_line(render_s3_outcome(res, g.vertex_count()), out.json);
  return res.status == Tri::no ? kExitNegative : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flow-index and strongly-connected contractibility certifier"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand too

  uint64_t budget = 0;
  uint64_t rng_seed = 0;
  bool json = false, dot = false;
  std::string output_path;
  app.add_option("--budget", budget, "search budget in nodes (default 3^20)");
  app.add_option("--seed", rng_seed, "seed for generator tooling (unused by solvers)");
  app.add_flag("--json", json, "print certificates as JSON instead of text reports");
  app.add_flag("--dot", dot, "print a DOT rendering of a certified orientation");
  app.add_option("-o,--output", output_path, "write the certificate JSON to a file");

  std::string in_path, oracle_what, base_csv, beta_csv_arg, cert_path, catalog_name;
  bool force_large = false;
  int witness_index = -1;

  CLI::App* certify = app.add_subcommand("certify-pair",
                                         "certify phi<3 for a graph or its complement");
  certify->add_option("file", in_path, "input graph (edge list or graph6, - for stdin)")
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive searches on one graph");
  oracle->add_option("what", oracle_what, "s3 or phi")
      ->required()
      ->check(CLI::IsMember({"s3", "phi"}));
  oracle->add_option("file", in_path, "input graph")->required();

  CLI::App* closure = app.add_subcommand("closure", "3-closure of a base set");
  closure->add_option("file", in_path, "input graph")->required();
  closure->add_option("--base", base_csv, "comma-separated base vertex ids")->required();

  CLI::App* attachments = app.add_subcommand("attachments", "scan for bad attachments");
  attachments->add_option("file", in_path, "input graph")->required();
  attachments->add_flag("--force", force_large, "allow scans beyond 40 vertices");
  attachments->add_option("--witness", witness_index,
                          "emit a non-membership certificate for the i-th hit");

  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate, no search");
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify->add_option("file", in_path, "the graph the certificate references")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "emit a named catalog graph");
  catalog->add_option("name", catalog_name, "catalog entry name")->required();
  catalog->add_option("--beta", beta_csv_arg,
                      "comma-separated boundary; emits an orientation certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (budget == 0) budget = default_budget();
    Output out{output_path, json, dot};

    if (*certify) {
      MultiGraph g = load_graph(in_path);
      PipelineOptions opts;
      opts.budget = budget;
      Certificate cert = certify_pair(g, opts);
      if (!json) std::cout << render_report(cert, g);
      MultiGraph side = claim_about_complement(cert.claim) ? complement(g) : g;
      out.emit_certificate(cert, side);
      return cert.claim == Claim::inconclusive ? kExitInconclusive : kExitPositive;
    }

    if (*oracle) {
      MultiGraph g = load_graph(in_path);
      return cmd_oracle(oracle_what, g, budget, out);
    }

    if (*closure) {
      MultiGraph g = load_graph(in_path);
      std::vector<Vertex> base;
      std::istringstream bs(base_csv);
      std::string tok;
      while (std::getline(bs, tok, ',')) base.push_back(std::stoi(tok));
      ClosureSequence seq = compute_cl3(g, VertexSet(base));
      if (json) {
        flow3::json j;
        j["base"] = std::vector<Vertex>(seq.base.begin(), seq.base.end());
        j["order"] = seq.order;
        j["closure"] = std::vector<Vertex>(seq.closure.begin(), seq.closure.end());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "base:";
        for (Vertex v : seq.base) std::cout << " " << v;
        std::cout << "\norder:";
        for (Vertex v : seq.order) std::cout << " " << v;
        std::cout << "\nclosure:";
        for (Vertex v : seq.closure) std::cout << " " << v;
        std::cout << "\n";
      }
      return kExitPositive;
    }

    if (*attachments) {
      MultiGraph g = load_graph(in_path);
      std::vector<BadAttachment> hits = detect_bad_attachments(g, force_large);
      if (json) {
        flow3::json arr = flow3::json::array();
        for (const BadAttachment& a : hits)
          arr.push_back({{"gamma", std::vector<Vertex>(a.gamma.begin(), a.gamma.end())},
                         {"inside", a.internal_edges},
                         {"out", a.out_edges}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const BadAttachment& a : hits) {
          std::cout << "gamma={";
          bool first = true;
          for (Vertex v : a.gamma) {
            std::cout << (first ? "" : ",") << v;
            first = false;
          }
          std::cout << "} inside=" << a.internal_edges << " out=" << a.out_edges << "\n";
        }
        if (hits.empty()) std::cout << "no bad attachments of size 3..6\n";
      }
      if (witness_index >= 0 && witness_index < static_cast<int>(hits.size())) {
        Certificate cert = not_s3_witness(g, hits[witness_index].gamma);
        out.emit_certificate(cert, g);
      }
      return hits.empty() ? kExitInconclusive : kExitNegative;
    }

    if (*verify) {
      std::ifstream cin_(cert_path);
      if (!cin_) throw ParseError("cannot open certificate: " + cert_path, 0);
      flow3::json j = flow3::json::parse(cin_);
      Certificate cert = certificate_from_json(j);
      MultiGraph g = load_graph(in_path);
      VerifyResult vr = verify_certificate(cert, g);
      if (!vr.ok) {
        std::cout << "verification FAILED (" << verify_code_name(vr.code)
                  << "): " << vr.detail << "\n";
        return kExitInputError;
      }
      std::cout << "verification passed (" << verify_code_name(vr.code) << ")\n";
      if (cert.claim == Claim::inconclusive) return kExitInconclusive;
      return claim_positive(cert.claim) ? kExitPositive : kExitNegative;
    }

    if (*catalog) {
      CatalogEntry entry = catalog_lookup(catalog_name);
      if (json) {
        flow3::json j;
        j["name"] = entry.name;
        j["status"] = claimed_status_name(entry.claimed_status);
        j["edge_list"] = serialize_edge_list(entry.graph);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << serialize_edge_list(entry.graph);
        std::cout << "c status " << claimed_status_name(entry.claimed_status) << "\n";
      }
      if (!beta_csv_arg.empty()) {
        if (!entry.provider)
          throw std::invalid_argument("catalog entry has no orientation provider");
        Boundary beta = parse_beta_csv(beta_csv_arg, entry.graph.vertex_count());
        Certificate cert;
        cert.claim = Claim::s3_G;
        cert.graph_digest = graph_digest(entry.graph);
        cert.budget = budget;
        cert.beta = std::vector<uint8_t>(beta.values());
        SeedSpec seed;
        if (entry.name == "k4_star" || entry.name == "k3_1" || entry.name == "k3_2") {
          seed.family = entry.name;
        } else if (entry.name.rfind("mk2_", 0) == 0) {
          seed.family = "mk2";
          seed.params = {entry.graph.edge_count()};
        } else if (entry.name.rfind("k3t_", 0) == 0) {
          seed.family = "k3t_plus";
          seed.params = {0, 1, 2};
        } else {
          seed.family = "bipartite";
          size_t mid = entry.name.find('_', 2);
          seed.params = {std::stoi(entry.name.substr(2, mid - 2)),
                         std::stoi(entry.name.substr(mid + 1))};
        }
        seed.emb = identity_embedding(entry.graph);
        cert.seed = seed;
        ClosureSequence whole;
        whole.base = VertexSet(seed.emb.vertex_of);
        whole.closure = whole.base;
        ContractionResult cr = contract(entry.graph, whole.closure);
        ReductionStep first;
        first.kind = ReductionStep::Kind::remainder;
        first.post_digest = orientation_digest(cr.graph, Orientation(0));
        cert.trace.push_back(first);
        Orientation d = lift_closure_chain(entry.graph, whole, *entry.provider, seed.emb,
                                           beta, Orientation(0), &cert.trace);
        cert.orientation = to_arcs(entry.graph, d);
        VerifyResult vr = verify_certificate(cert, entry.graph);
        if (!vr.ok)
          throw std::logic_error(std::string("catalog certificate failed verification: ") +
                                 vr.detail);
        out.emit_certificate(cert, entry.graph);
        if (!json) std::cout << "c certificate verified for beta " << beta_csv_arg << "\n";
      }
      return entry.claimed_status == ClaimedStatus::in_s3 ||
                     entry.claimed_status == ClaimedStatus::phi_lt_3
                 ? kExitPositive
                 : kExitNegative;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const flow3::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
