#include <catch2/catch_amalgamated.hpp>

#include "flow3/io.hpp"
#include "flow3/multigraph.hpp"
#include "test_util.hpp"

using namespace flow3;
using testutil::complete_graph;
using testutil::cycle_graph;

TEST_CASE("complement of named graphs") {
  MultiGraph k4 = complete_graph(4);
  CHECK(complement(k4).edge_count() == 0);

  MultiGraph e5(5);
  MultiGraph k5 = complement(e5);
  CHECK(k5.edge_count() == 10);
  CHECK(min_degree(k5) == 4);

  // complement of the 5-cycle 0-1-2-3-4 is the 5-cycle 0-2-4-1-3
  MultiGraph c5 = cycle_graph(5);
  MultiGraph cc = complement(c5);
  REQUIRE(cc.edge_count() == 5);
  for (auto [u, v] : {std::pair{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}})
    CHECK(cc.multiplicity(u, v) == 1);
}

TEST_CASE("complement rejects parallel edges") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(complement(g), std::invalid_argument);
}

TEST_CASE("complement is an involution; degrees pair up to n-1") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    MultiGraph g(n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    MultiGraph gc = complement(g);
    for (Vertex v = 0; v < n; ++v)
      CHECK(g.degree(v) + gc.degree(v) == n - 1);
    MultiGraph back = complement(gc);
    CHECK(canonical_text(back) == canonical_text(g));
  }
}

TEST_CASE("contraction of named cases") {
  MultiGraph k4 = complete_graph(4);
  auto c = contract(k4, VertexSet{1, 2, 3});
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.graph.edge_count() == 3);  // three parallel survivors

  // single vertex: identity up to relabeling
  auto id = contract(k4, VertexSet{2});
  CHECK(id.graph.vertex_count() == 4);
  CHECK(id.graph.edge_count() == 6);

  // the 4-side of K_{4,10} leaves a star of 4-fold parallel classes
  MultiGraph k410(14);
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 4; y < 14; ++y) k410.add_edge(x, y);
  auto s = contract(k410, VertexSet{0, 1, 2, 3});
  CHECK(s.graph.vertex_count() == 11);
  CHECK(s.graph.edge_count() == 40);
  for (Vertex leaf = 1; leaf < 11; ++leaf)
    CHECK(s.graph.multiplicity(s.merged, leaf) == 4);
}

TEST_CASE("contract validates input") {
  MultiGraph k4 = complete_graph(4);
  CHECK_THROWS_AS(contract(k4, VertexSet{}), std::invalid_argument);
  CHECK_THROWS_AS(contract(k4, VertexSet{7}), std::invalid_argument);
}

TEST_CASE("contracting twice equals contracting the union, exactly") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    MultiGraph g = testutil::random_multigraph(n, 4 + static_cast<int>(rng() % 10), rng);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) a.push_back(v);
      else if (rng() % 3 == 0) b.push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    auto c1 = contract(g, VertexSet(a));
    VertexSet b_mapped;
    for (Vertex v : b) b_mapped.insert(c1.vertex_map[v]);
    b_mapped.insert(c1.vertex_map[a.front()]);
    auto c2 = contract(c1.graph, b_mapped);
    VertexSet uni(a);
    for (Vertex v : b) uni.insert(v);
    auto cu = contract(g, uni);
    CHECK(c2.graph == cu.graph);
  }
}

TEST_CASE("delete vertex and add edge") {
  MultiGraph k4 = complete_graph(4);
  SplitResult r = delete_vertex_add_edge(k4, 0, 1, 2);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 4);  // triangle plus a parallel copy on {1,2}
  CHECK(r.graph.multiplicity(r.vertex_map[1], r.vertex_map[2]) == 2);
  CHECK(r.consumed.size() == 3);
  CHECK(r.new_edge == 3);

  // a leaf cannot designate two distinct incident edges
  MultiGraph star(5);
  for (Vertex leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  CHECK_THROWS_AS(delete_vertex_add_edge(star, 1, 0, 2), std::invalid_argument);

  // loop rejection
  CHECK_THROWS_AS(delete_vertex_add_edge(k4, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("delete vertex in a bipartite host") {
  // removing one 10-side vertex for a replacement edge across the 4-side
  MultiGraph k410(14);
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 4; y < 14; ++y) k410.add_edge(x, y);
  SplitResult r = delete_vertex_add_edge(k410, 4, 0, 1);
  CHECK(r.graph.vertex_count() == 13);
  CHECK(r.graph.multiplicity(r.vertex_map[0], r.vertex_map[1]) == 1);
  CHECK(r.graph.edge_count() == 37);
  CHECK(r.consumed.size() == 4);
}

TEST_CASE("cross edge counts") {
  MultiGraph k35(8);
  for (Vertex x = 0; x < 3; ++x)
    for (Vertex y = 3; y < 8; ++y) k35.add_edge(x, y);
  CHECK(cross_edge_count(k35, VertexSet{0, 1, 2}, VertexSet{3, 4, 5, 6, 7}) == 15);
  CHECK(cross_edge_count(k35, VertexSet{}, VertexSet{0, 1}) == 0);

  MultiGraph k6 = complete_graph(6);
  CHECK(cross_edge_count(k6, VertexSet{0, 1}, VertexSet{2, 3, 4, 5}) == 8);
  CHECK_THROWS_AS(cross_edge_count(k6, VertexSet{0, 1}, VertexSet{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("min degree") {
  CHECK(min_degree(complete_graph(5)) == 4);
  CHECK(min_degree(cycle_graph(5)) == 2);
  MultiGraph k410(14);
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 4; y < 14; ++y) k410.add_edge(x, y);
  CHECK(min_degree(k410) == 4);
}

TEST_CASE("edge connectivity of named graphs") {
  CHECK(edge_connectivity(complete_graph(6)) == 5);
  MultiGraph g3(2);
  for (int i = 0; i < 3; ++i) g3.add_edge(0, 1);
  CHECK(edge_connectivity(g3) == 3);
  CHECK(edge_connectivity(MultiGraph(1)) == kInfiniteConnectivity);
  MultiGraph disc(3);
  disc.add_edge(0, 1);
  CHECK(edge_connectivity(disc) == 0);
}

TEST_CASE("edge connectivity agrees with brute-force cuts") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);  // up to 10
    int m = static_cast<int>(rng() % (3 * n + 1));
    MultiGraph g = testutil::random_multigraph(n, m, rng);
    CHECK(edge_connectivity(g) == testutil::brute_edge_connectivity(g));
  }
}

TEST_CASE("min edge cut returns a realizing side") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    MultiGraph g = testutil::random_multigraph(n, 2 * n, rng);
    auto [value, side] = min_edge_cut(g);
    REQUIRE(value == testutil::brute_edge_connectivity(g));
    REQUIRE(!side.empty());
    REQUIRE(side.size() < n);
    VertexSet rest;
    for (Vertex v = 0; v < n; ++v)
      if (!side.contains(v)) rest.insert(v);
    CHECK(cross_edge_count(g, side, rest) == value);
  }
}

TEST_CASE("bridges") {
  MultiGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(bridges(path).size() == 2);

  MultiGraph digon(2);
  digon.add_edge(0, 1);
  digon.add_edge(0, 1);
  CHECK(bridges(digon).empty());

  CHECK(bridges(testutil::cycle_graph(5)).empty());
}
