#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "balgraph/balance.hpp"
#include "balgraph/canon.hpp"
#include "balgraph/cayley.hpp"
#include "balgraph/census.hpp"
#include "balgraph/planar.hpp"
#include "oracles.hpp"

using namespace balgraph;

namespace {

bool three_connected_cubic_bipartite(const Graph& g) {
  return g.regular_degree() == 3 && is_connected(g) && is_bipartite(g) && oracle::menger_connectivity(g) >= 3;
}

}  // namespace

TEST_CASE("cube seed embedding") {
  const EmbeddedGraph cube = cube_seed();
  CHECK(is_isomorphic(cube.graph(), cube_graph()));
  CHECK(cube.faces().size() == 6);
  for (const FaceWalk& f : cube.faces()) CHECK(f.length() == 4);
  std::istringstream in(cube.to_text());
  const EmbeddedGraph again = EmbeddedGraph::parse(in);
  CHECK(again.graph() == cube.graph());
  CHECK(again.rotation() == cube.rotation());
}

TEST_CASE("embedding validation") {
  // K4 with a non-planar rotation at one vertex.
  std::vector<std::vector<Vertex>> rot{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  CHECK_NOTHROW(EmbeddedGraph::from_rotation(rot));
  rot[0] = {1, 3, 2};
  CHECK_THROWS_AS(EmbeddedGraph::from_rotation(rot), EmbeddingError);
  CHECK_THROWS_AS(EmbeddedGraph(complete_graph(3), {{1}, {0, 2}, {1, 0}}), EmbeddingError);
  CHECK_THROWS_AS(EmbeddedGraph::from_rotation({{1}, {2}, {1}}), GraphError);
  std::istringstream bad("0: 1 x\n");
  CHECK_THROWS_AS(EmbeddedGraph::parse(bad), EmbeddingError);
}

TEST_CASE("planarity test") {
  CHECK(planarity_test(cube_graph()).has_value());
  CHECK_FALSE(planarity_test(complete_bipartite(3, 3)).has_value());
  CHECK_FALSE(planarity_test(complete_graph(5)).has_value());
  CHECK(planarity_test(complete_graph(4)).has_value());
  CHECK(is_planar(Graph::from_edges(6, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_planar(lt_cycle({8, 3})));
  // Heawood graph (girth 6, cubic bipartite) is not planar.
  std::vector<Edge> heawood;
  for (int i = 0; i < 14; ++i) {
    heawood.push_back(Edge::make(i, (i + 1) % 14));
    if (i % 2 == 0) heawood.push_back(Edge::make(i, (i + 5) % 14));
  }
  CHECK_FALSE(planarity_test(Graph::from_edges(14, heawood)).has_value());
  CHECK_THROWS_AS(planarity_test(Graph(3)), GraphError);
}

TEST_CASE("diamond inflation") {
  const EmbeddedGraph cube = cube_seed();
  for (Vertex v = 0; v < 8; ++v) {
    const EmbeddedGraph x = diamond_inflation(cube, v);
    CHECK(x.graph().order() == 14);
    CHECK(three_connected_cubic_bipartite(x.graph()));
    CHECK(x.faces().size() == 9);
  }
  // All inflations of the cube are isomorphic (the cube is vertex-transitive).
  CHECK(is_isomorphic(diamond_inflation(cube, 0).graph(), diamond_inflation(cube, 5).graph()));
  CHECK_THROWS_AS(diamond_inflation(cube, 8), GraphError);
}

TEST_CASE("A1 subdivision") {
  const EmbeddedGraph cube = cube_seed();
  const auto sites = a1_sites(cube);
  CHECK_FALSE(sites.empty());
  for (const auto& [d1, d2] : sites) {
    const EmbeddedGraph x = a1_subdivision(cube, d1, d2);
    CHECK(x.graph().order() == 12);
    CHECK(three_connected_cubic_bipartite(x.graph()));
  }
  // Opposite edges of a cube face.
  const FaceWalk& f = cube.faces().front();
  const Dart d1 = f.darts[0];
  const Dart d2 = f.darts[2];
  CHECK(a1_subdivision(cube, d1, d2).graph().order() == 12);
  CHECK_THROWS_AS(a1_subdivision(cube, f.darts[0], f.darts[1]), GraphError);  // adjacent edges
  CHECK_THROWS_AS(a1_subdivision(cube, Edge{0, 1}, Edge{0, 2}), GraphError);
}

TEST_CASE("generation matches filtered census") {
  const BatageljResult r = batagelj_enumerate(20);
  std::map<int, std::set<CanonicalForm>> by_order;
  for (const EmbeddedGraph& eg : r.graphs) {
    CHECK(three_connected_cubic_bipartite(eg.graph()));
    by_order[eg.graph().order()].insert(canonical_form(eg.graph()));
  }
  CHECK(r.rejected == 0);
  // Oracle: census graphs that are planar and 3-connected.
  for (int d = 6; d <= 20; d += 2) {
    std::set<CanonicalForm> expected;
    for (const Graph& g : enumerate_cubic_bipartite(d))
      if (planarity_test(g) && oracle::menger_connectivity(g) >= 3) expected.insert(canonical_form(g));
    CHECK(by_order[d] == expected);
  }
  const std::vector<std::size_t> counts{1, 0, 1, 1, 2, 2, 8};
  for (std::size_t i = 0; i < counts.size(); ++i) CHECK(by_order[8 + 2 * static_cast<int>(i)].size() == counts[i]);
}

TEST_CASE("S_v subgraphs of the cube") {
  const EmbeddedGraph cube = cube_seed();
  for (Vertex v = 0; v < 8; ++v) {
    const SvSubgraph s = s_v_subgraph(cube, v);
    // Three faces at a cube vertex cover 7 vertices and 9 edges.
    CHECK(popcount(s.vertices) == 7);
    CHECK(s.edges.size() == 9);
    CHECK(s.is_induced_in(cube.graph()));
    CHECK_FALSE(is_balanced(s.as_graph(cube.graph())).balanced);
  }
  const PlanarCheck c = verify_sv_claims(cube);
  CHECK(c.ok());
  CHECK(c.sv_intersection_empty);
}

TEST_CASE("S_v claims on generated graphs") {
  for (const EmbeddedGraph& eg : batagelj_enumerate(18).graphs) {
    const PlanarCheck c = verify_sv_claims(eg);
    CHECK(c.cubic);
    CHECK(c.three_connected);
    CHECK(c.unbalanced);
    CHECK(c.edge_deletions_unbalanced);
    CHECK(c.sv_induced);
    CHECK(c.sv_unbalanced);
    CHECK(c.sv_intersection_empty);
  }
  const auto square = EmbeddedGraph::from_rotation({{1, 3}, {0, 2}, {1, 3}, {2, 0}});
  CHECK_FALSE(verify_sv_claims(square).ok());
}

TEST_CASE("2-cut decomposition") {
  // Two copies of the cube minus an edge, joined across a 2-cut.
  const Graph piece = delete_edge(cube_graph(), {0, 1});
  const Graph x = join_across_two_cut(piece, piece);
  CHECK(x.order() == 16);
  CHECK(x.regular_degree() == 3);
  CHECK(is_bipartite(x));
  CHECK(vertex_connectivity(x) == 2);
  const auto rep = two_cut_decompose(x);
  REQUIRE(rep.has_value());
  CHECK(rep->triples_found >= 1);
  CHECK_FALSE(x.adjacent(rep->a, rep->b));
  CHECK(rep->closed.regular_degree() == 3);
  CHECK(is_bipartite(rep->closed));
  CHECK(vertex_connectivity(rep->closed) >= 3);
  CHECK(planarity_test(rep->closed).has_value());
  CHECK((rep->component & ~(bit(rep->cut.u) | bit(rep->cut.v))) == rep->component);
  CHECK_FALSE(two_cut_decompose(cube_graph()).has_value());
  CHECK_THROWS_AS(two_cut_decompose(cycle_graph(6)), GraphError);
  CHECK_THROWS_AS(two_cut_decompose(complete_bipartite(3, 3)), GraphError);
}

TEST_CASE("2-cut compositions of generated pieces are unbalanced") {
  // Pieces: generated graphs minus one edge; joined in both orientations.
  std::vector<Graph> pieces;
  for (const EmbeddedGraph& eg : batagelj_enumerate(12).graphs)
    for (const Edge& e : eg.graph().edges()) pieces.push_back(delete_edge(eg.graph(), e));
  int tested = 0;
  for (const Graph& a : pieces)
    for (const Graph& b : pieces)
      for (bool swap : {false, true}) {
        Graph bb = b;
        if (swap) {
          std::vector<Vertex> p(static_cast<std::size_t>(b.order()));
          std::vector<Vertex> deg2;
          for (Vertex v = 0; v < b.order(); ++v) {
            p[static_cast<std::size_t>(v)] = v;
            if (b.degree(v) == 2) deg2.push_back(v);
          }
          std::swap(p[static_cast<std::size_t>(deg2[0])], p[static_cast<std::size_t>(deg2[1])]);
          bb = b.permuted(p);
        }
        const Graph x = join_across_two_cut(a, bb);
        if (!is_bipartite(x) || !is_planar(x)) continue;
        ++tested;
        CHECK_FALSE(is_balanced(x).balanced);
      }
  CHECK(tested > 0);
  MESSAGE("compositions tested: " << tested);
}
