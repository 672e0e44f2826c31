#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "flow3/pipeline.hpp"
#include "test_util.hpp"

// Exercises the installed binary end to end: exit codes, file formats and
// the verify round trip.

namespace fs = std::filesystem;
using namespace flow3;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  fs::path dir = fs::temp_directory_path() / "flow3_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string(FLOW3_CLI_PATH) + " " + args + " > " +
                    out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return {WEXITSTATUS(rc), text};
}

fs::path write_graph(const std::string& name, const MultiGraph& g) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << serialize_edge_list(g);
  return p;
}

}  // namespace

TEST_CASE("oracle exit codes and wording") {
  fs::path k6 = write_graph("k6.mg", testutil::complete_graph(6));
  RunResult neg = run_cli("oracle phi " + k6.string());
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.find("phi(G) >= 3") != std::string::npos);
  CHECK(neg.out.find("exhaustive") != std::string::npos);

  MultiGraph four(2);
  for (int i = 0; i < 4; ++i) four.add_edge(0, 1);
  fs::path fk = write_graph("4k2.mg", four);
  RunResult pos = run_cli("oracle s3 " + fk.string());
  CHECK(pos.exit_code == 0);
  CHECK(pos.out.find("in S3: 3/3 boundary classes witnessed") != std::string::npos);

  MultiGraph three(2);
  for (int i = 0; i < 3; ++i) three.add_edge(0, 1);
  fs::path tk = write_graph("3k2.mg", three);
  RunResult no = run_cli("oracle s3 " + tk.string());
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("not in S3") != std::string::npos);
}

TEST_CASE("budget flag and environment override") {
  fs::path k6 = write_graph("k6b.mg", testutil::complete_graph(6));
  RunResult r = run_cli("--budget 5 oracle phi " + k6.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("inconclusive") != std::string::npos);

  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string("FLOW3_BUDGET=5 ") + FLOW3_CLI_PATH + " oracle phi " +
                    k6.string() + " > " + out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 2);
}

TEST_CASE("malformed input exits 3 with a position") {
  fs::path p = work_dir() / "bad.mg";
  {
    std::ofstream out(p);
    out << "p mgraph 4 1\ne 3 3\n";
  }
  RunResult r = run_cli("oracle phi " + p.string());
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("line 2") != std::string::npos);
}

TEST_CASE("certify-pair emits a verifiable certificate") {
  MultiGraph g = testutil::build_pair_instance(32, 501, true);
  fs::path gp = write_graph("pair.mg", g);
  fs::path cert = work_dir() / "pair.cert.json";
  RunResult r = run_cli("-o " + cert.string() + " certify-pair " + gp.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("claim: phi_lt_3_G") != std::string::npos);
  CHECK(r.out.find("verification: passed") != std::string::npos);

  RunResult v = run_cli("verify " + cert.string() + " " + gp.string());
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("verification passed") != std::string::npos);

  // verifying against the wrong graph is an input error
  fs::path other = write_graph("other.mg", testutil::complete_graph(32));
  RunResult w = run_cli("verify " + cert.string() + " " + other.string());
  CHECK(w.exit_code == 3);
  CHECK(w.out.find("digest_mismatch") != std::string::npos);
}

TEST_CASE("certify-pair inconclusive on a hopeless input") {
  fs::path p = write_graph("c10.mg", testutil::cycle_graph(10));
  RunResult r = run_cli("certify-pair " + p.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("claim: inconclusive") != std::string::npos);
}

TEST_CASE("attachments subcommand") {
  fs::path host = write_graph("badtri.mg", make_bad_attachment_example("triangle"));
  RunResult r = run_cli("attachments " + host.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("gamma={14,15,16}") != std::string::npos);

  fs::path k10 = write_graph("k10.mg", testutil::complete_graph(10));
  RunResult none = run_cli("attachments " + k10.string());
  CHECK(none.exit_code == 2);

  fs::path cert = work_dir() / "witness.cert.json";
  RunResult w = run_cli("-o " + cert.string() + " attachments --witness 0 " +
                        host.string());
  CHECK(w.exit_code == 1);
  RunResult v = run_cli("verify " + cert.string() + " " + host.string());
  CHECK(v.exit_code == 1);  // verified negative carries the witness exit code
}

TEST_CASE("closure subcommand") {
  MultiGraph kmn = detail::complete_bipartite_graph(5, 12);
  fs::path p = write_graph("k512.mg", kmn);
  RunResult r = run_cli("closure " + p.string() + " --base 0,1,2,3,5,6,7,8,9,10,11,12,13,14");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order: 4") != std::string::npos);
  CHECK(r.out.find("closure: 0 1 2 3 4 5") != std::string::npos);
}

TEST_CASE("catalog subcommand") {
  RunResult r = run_cli("catalog k4_star");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p mgraph 4 10") != std::string::npos);
  CHECK(r.out.find("c status in_S3") != std::string::npos);

  RunResult neg = run_cli("catalog mk2_3");
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.find("not_in_S3") != std::string::npos);

  fs::path cert = work_dir() / "k410.cert.json";
  RunResult with_beta = run_cli("-o " + cert.string() +
                                " catalog k_4_10 --beta 1,2,0,0,0,0,0,0,0,0,0,0,0,0");
  CHECK(with_beta.exit_code == 0);
  CHECK(with_beta.out.find("certificate verified") != std::string::npos);

  // the emitted certificate verifies against the emitted graph
  fs::path gp = work_dir() / "k410.mg";
  {
    std::ofstream out(gp);
    out << serialize_edge_list(detail::complete_bipartite_graph(4, 10));
  }
  RunResult v = run_cli("verify " + cert.string() + " " + gp.string());
  CHECK(v.exit_code == 0);

  RunResult unknown = run_cli("catalog petersen");
  CHECK(unknown.exit_code == 3);
}

TEST_CASE("graph6 input and dot output") {
  fs::path p = work_dir() / "k6.g6";
  {
    std::ofstream out(p);
    out << "E~~w\n";
  }
  RunResult r = run_cli("oracle phi " + p.string());
  CHECK(r.exit_code == 1);

  MultiGraph k4s = catalog_lookup("k4_star").graph;
  fs::path kp = write_graph("k4s.mg", k4s);
  RunResult d = run_cli("--dot oracle phi " + kp.string());
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("digraph flow3") != std::string::npos);
}

TEST_CASE("stdin input") {
  fs::path p = write_graph("stdin_k6.mg", testutil::complete_graph(6));
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string("cat ") + p.string() + " | " + FLOW3_CLI_PATH +
                    " oracle phi - > " + out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 1);
}

TEST_CASE("bad flags are input errors") {
  RunResult r = run_cli("oracle nothere somefile");
  CHECK(r.exit_code == 3);
  RunResult r2 = run_cli("frobnicate");
  CHECK(r2.exit_code == 3);
}

TEST_CASE("certify-pair requires a simple graph") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  fs::path p = write_graph("multi.mg", g);
  RunResult r = run_cli("certify-pair " + p.string());
  CHECK(r.exit_code == 3);
}

TEST_CASE("repeated runs produce identical output") {
  MultiGraph g = testutil::build_pair_instance(32, 777, false);
  fs::path gp = write_graph("det.mg", g);
  RunResult a = run_cli("--json certify-pair " + gp.string());
  RunResult b = run_cli("--json certify-pair " + gp.string());
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output mode") {
  MultiGraph k4s = catalog_lookup("k4_star").graph;
  fs::path kp = write_graph("k4s_json.mg", k4s);
  RunResult r = run_cli("--json oracle phi " + kp.string());
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["claim"] == "phi_lt_3_G");
  Certificate cert = certificate_from_json(j);
  CHECK(verify_certificate(cert, k4s).ok);

  // membership oracle emits the full witness table as one JSON object
  MultiGraph four(2);
  for (int i = 0; i < 4; ++i) four.add_edge(0, 1);
  fs::path fp = write_graph("4k2_json.mg", four);
  RunResult s3 = run_cli("--json oracle s3 " + fp.string());
  CHECK(s3.exit_code == 0);
  json js = json::parse(s3.out);
  CHECK(js["witness_table"].size() == 3);
  CHECK(verify_certificate(certificate_from_json(js), four).ok);

  // negative outcomes stay valid JSON in json mode
  fs::path k6p = write_graph("k6_json.mg", testutil::complete_graph(6));
  RunResult neg = run_cli("--json oracle phi " + k6p.string());
  CHECK(neg.exit_code == 1);
  json jn = json::parse(neg.out);
  CHECK(jn.contains("outcome"));
}

TEST_CASE("global flags work after the subcommand") {
  fs::path k6 = write_graph("k6_trail.mg", testutil::complete_graph(6));
  RunResult r = run_cli("oracle phi " + k6.string() + " --budget 5");
  CHECK(r.exit_code == 2);
}
