#include <doctest.h>

#include <sstream>

#include "balgraph/balance.hpp"
#include "balgraph/cayley.hpp"
#include "oracles.hpp"

using namespace balgraph;

namespace {

ZeroOneMatrix circulant_incidence(int n) {
  // Column j covers rows j and j+1 (mod n).
  ZeroOneMatrix a(n, n);
  for (int j = 0; j < n; ++j) {
    a.set(j, j, true);
    a.set((j + 1) % n, j, true);
  }
  return a;
}

}  // namespace

TEST_CASE("balance of small examples") {
  auto c6 = is_balanced(cycle_graph(6));
  CHECK_FALSE(c6.balanced);
  REQUIRE(std::holds_alternative<BadCycle>(c6.reason));
  CHECK(std::get<BadCycle>(c6.reason).cycle.length() == 6);

  CHECK(is_balanced(cycle_graph(4)).balanced);
  CHECK(is_balanced(cycle_graph(8)).balanced);
  CHECK_FALSE(is_balanced(cycle_graph(10)).balanced);
  CHECK(is_balanced(complete_bipartite(3, 3)).balanced);
  CHECK(is_balanced(path_graph(7)).balanced);
  CHECK_FALSE(is_balanced(cube_graph()).balanced);

  auto tri = is_balanced(complete_graph(3));
  CHECK_FALSE(tri.balanced);
  CHECK(std::holds_alternative<NotBipartite>(tri.reason));
  CHECK_THROWS_AS(is_balanced(Graph(3)), GraphError);
  CHECK(is_balanced_any(Graph(3)));
}

TEST_CASE("induced cycle enumeration matches subset brute force") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const int n = 3 + i % 8;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.06 * (i % 9));
    std::vector<int> lens;
    for (const auto& c : enumerate_induced_cycles(g)) {
      CHECK(is_induced_cycle(g, c.vertices));
      // Listed from the minimum vertex towards its smaller cycle neighbour.
      CHECK(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
      CHECK(c.vertices[1] < c.vertices.back());
      lens.push_back(c.length());
    }
    std::sort(lens.begin(), lens.end());
    CHECK(lens == oracle::induced_cycle_lengths(g));
  }
}

TEST_CASE("bounded enumeration and early stop") {
  const Graph g = lt_cycle({8, 2});
  const auto all = enumerate_induced_cycles(g);
  const auto short_ones = enumerate_induced_cycles(g, 4);
  CHECK(std::all_of(short_ones.begin(), short_ones.end(), [](const InducedCycle& c) { return c.length() == 4; }));
  CHECK(all.size() == short_ones.size() + 256);  // 2^8 lifts of C8
  int seen = 0;
  CHECK_FALSE(for_each_induced_cycle(g, std::nullopt, [&](const InducedCycle&) { return ++seen < 3; }));
  CHECK(seen == 3);
}

TEST_CASE("witnesses re-verify") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_connected_bipartite(rng, 3 + i % 5, 3 + i % 6, 0.3);
    const auto r = is_balanced(g);
    if (const auto* bc = std::get_if<BadCycle>(&r.reason)) {
      CHECK(is_induced_cycle(g, bc->cycle.vertices));
      CHECK(bc->cycle.length() % 4 == 2);
    }
    CHECK(r.balanced == is_balanced_exhaustive(g).balanced);
  }
}

TEST_CASE("matrix oracle on named instances") {
  CHECK(matrix_is_balanced_oracle(circulant_incidence(4)));
  CHECK_FALSE(matrix_is_balanced_oracle(circulant_incidence(3)));
  CHECK(matrix_is_balanced_oracle(circulant_incidence(2)));
  ZeroOneMatrix ones(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) ones.set(r, c, true);
  CHECK(matrix_is_balanced_oracle(ones));
}

TEST_CASE("graph checker agrees with matrix oracle on random bipartite graphs") {
  std::mt19937_64 rng(29);
  int balanced = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph g = oracle::random_connected_bipartite(rng, 2 + i % 5, 2 + (i / 5) % 5, 0.15 + 0.05 * (i % 6));
    const auto bp = std::get<Bipartition>(bipartition(g));
    const ZeroOneMatrix a = bipartite_adjacency_matrix(g, bp);
    const bool b = is_balanced(g).balanced;
    balanced += b ? 1 : 0;
    CHECK(b == matrix_is_balanced_oracle(a));
    CHECK(is_isomorphic(graph_of_matrix(a), g));
  }
  CHECK(balanced > 40);
  CHECK(balanced < 360);
}

TEST_CASE("matrix parse and text") {
  std::istringstream in("101\n011\n\n110\n");
  const ZeroOneMatrix a = ZeroOneMatrix::parse(in);
  CHECK(a.rows() == 3);
  CHECK(a.cols() == 3);
  CHECK(a.at(0, 0));
  CHECK_FALSE(a.at(0, 1));
  CHECK(a.column(2) == 0b011);
  CHECK(a.to_text() == "101\n011\n110\n");
  std::istringstream bad("10\n1x\n");
  CHECK_THROWS_AS(ZeroOneMatrix::parse(bad), GraphError);
  std::istringstream ragged("10\n101\n");
  CHECK_THROWS_AS(ZeroOneMatrix::parse(ragged), GraphError);
}
