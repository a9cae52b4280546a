#include <doctest.h>

#include <sstream>

#include "balgraph/graph.hpp"
#include "balgraph/graph6.hpp"
#include "oracles.hpp"

using namespace balgraph;

TEST_CASE("basic constructions") {
  const Graph k33 = complete_bipartite(3, 3);
  CHECK(k33.order() == 6);
  CHECK(k33.edge_count() == 9);
  CHECK(k33.regular_degree() == 3);
  CHECK(is_bipartite(k33));
  CHECK(cycle_graph(6).regular_degree() == 2);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(complete_graph(5).edge_count() == 10);
  const Graph q3 = cube_graph();
  CHECK(q3.order() == 8);
  CHECK(q3.regular_degree() == 3);
  CHECK(girth(q3) == 4);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::from_rows({0b10, 0b00}), GraphError);
  CHECK_THROWS_AS(Graph(65), SizeLimitError);
  CHECK_THROWS_AS(bipartition(Graph(2)), GraphError);
}

TEST_CASE("bipartition and odd walks") {
  auto r = bipartition(cycle_graph(8));
  REQUIRE(std::holds_alternative<Bipartition>(r));
  const auto& b = std::get<Bipartition>(r);
  CHECK(b.side[0] == 0);
  CHECK(popcount(b.side_mask(0)) == 4);

  for (int n : {3, 5, 7, 9}) {
    const Graph g = cycle_graph(n);
    auto odd = bipartition(g);
    REQUIRE(std::holds_alternative<OddClosedWalk>(odd));
    const auto& w = std::get<OddClosedWalk>(odd).walk;
    CHECK(w.size() % 2 == 1);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(g.adjacent(w[i], w[(i + 1) % w.size()]));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 0.35);
    if (!is_connected(g)) continue;
    auto res = bipartition(g);
    if (auto* w = std::get_if<OddClosedWalk>(&res)) {
      CHECK(w->walk.size() % 2 == 1);
      for (std::size_t k = 0; k < w->walk.size(); ++k) CHECK(g.adjacent(w->walk[k], w->walk[(k + 1) % w->walk.size()]));
    } else {
      const auto& side = std::get<Bipartition>(res).side;
      for (const Edge& e : g.edges()) CHECK(side[e.u] != side[e.v]);
    }
  }
}

TEST_CASE("components and induced subgraphs") {
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b000111);
  CHECK(comps[1] == 0b011000);
  CHECK(comps[2] == 0b100000);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected_within(g, 0b111));
  const auto sub = induced_subgraph(g, Bits{0b11010});
  CHECK(sub.graph.order() == 3);
  CHECK(sub.original == std::vector<Vertex>{1, 3, 4});
  CHECK(sub.graph.edge_count() == 1);
  CHECK(delete_vertex(g, 1).edge_count() == 1);
  CHECK(delete_edge(g, {0, 1}).edge_count() == 2);
  CHECK(add_edge(g, {2, 3}).edge_count() == 4);
}

TEST_CASE("twins") {
  const Graph k33 = complete_bipartite(3, 3);
  const auto tp = twin_classes(k33);
  CHECK(tp.classes.size() == 2);
  CHECK(tp.has_nontrivial_twins());
  CHECK(twin_quotient(k33) == complete_graph(2));
  CHECK_FALSE(twin_classes(cycle_graph(8)).has_nontrivial_twins());
  CHECK_FALSE(twin_classes(cube_graph()).has_nontrivial_twins());
  // C4 = K_{2,2}: twin classes are the two sides.
  CHECK(twin_classes(cycle_graph(4)).classes.size() == 2);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK_FALSE(girth(path_graph(5)).has_value());
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(complete_bipartite(3, 3)) == 4);
}

TEST_CASE("vertex connectivity agrees with Menger max-flow") {
  CHECK(vertex_connectivity(cube_graph()) == 3);
  CHECK(vertex_connectivity(cycle_graph(6)) == 2);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 4 + i % 7, 0.3 + 0.05 * (i % 8));
    if (!is_connected(g)) continue;
    ++tested;
    CHECK(vertex_connectivity(g) == oracle::menger_connectivity(g));
  }
  CHECK(tested > 100);
}

TEST_CASE("two cuts") {
  const auto cuts = two_cuts(cycle_graph(5));
  CHECK(cuts.size() == 5);  // non-adjacent pairs of C5
  CHECK(two_cuts(cube_graph()).empty());
}

TEST_CASE("graph6 round trip and errors") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 5, 13, 40, 63, 64}) {
    const Graph g = oracle::random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6("C~~"), GraphError);
  CHECK_THROWS_AS(from_graph6("C "), GraphError);
  CHECK_THROWS_AS(from_graph6("A`"), GraphError);  // padding bits set
  CHECK_THROWS_AS(from_graph6(""), GraphError);
  std::istringstream in("C~\n\nBw\n");
  const auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == complete_graph(3));
  std::ostringstream out;
  write_graph6_stream(out, gs);
  CHECK(out.str() == "C~\nBw\n");
}
