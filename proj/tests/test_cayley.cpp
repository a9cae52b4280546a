#include <doctest.h>

#include "balgraph/balance.hpp"
#include "balgraph/canon.hpp"
#include "balgraph/cayley.hpp"
#include "oracles.hpp"

using namespace balgraph;

TEST_CASE("abelian groups") {
  const AbelianGroup g = AbelianGroup::parse("2x4");
  CHECK(g.order() == 8);
  CHECK(g.to_string() == "2x4");
  for (int i = 0; i < g.order(); ++i) {
    CHECK(g.index(g.element(i)) == i);
    CHECK(g.add_index(i, g.negate_index(i)) == 0);
  }
  CHECK(g.element_order({1, 1}) == 4);
  CHECK(g.multiples({0, 2}).size() == 2);
  CHECK_THROWS_AS(AbelianGroup::parse("4x2"), GraphError);
  CHECK_THROWS_AS(AbelianGroup::parse("2xx4"), GraphError);
  CHECK_THROWS_AS(AbelianGroup::parse("1"), GraphError);
  CHECK_THROWS_AS(AbelianGroup({2, 3}), GraphError);
  // Numbers of abelian groups of a given order.
  const std::vector<std::pair<int, std::size_t>> counts{{1, 0}, {8, 3}, {12, 2}, {16, 5}, {24, 3}, {36, 4}, {32, 7}};
  for (auto [n, c] : counts) CHECK(AbelianGroup::all_of_order(n).size() == c);
}

TEST_CASE("connection sets") {
  const AbelianGroup z8({8});
  CHECK(ConnectionSet::parse(z8, "1,7").elements == std::vector<int>{1, 7});
  CHECK_THROWS_AS(ConnectionSet::parse(z8, "1,3"), GraphError);
  CHECK_THROWS_AS(ConnectionSet::parse(z8, "0,1,7"), GraphError);
  CHECK_THROWS_AS(ConnectionSet::parse(z8, "1,a"), GraphError);
  const AbelianGroup g = AbelianGroup::parse("2x4");
  const auto s = ConnectionSet::parse(g, "(0,1),(0,3),(1,0)");
  CHECK(s.elements.size() == 3);
  CHECK(ConnectionSet::parse(g, s.to_string(g)) == s);
}

TEST_CASE("connection-set enumeration") {
  std::vector<ConnectionSet> z4;
  enumerate_connection_sets(AbelianGroup({4}), true, false, [&](const ConnectionSet& s) { z4.push_back(s); });
  REQUIRE(z4.size() == 2);
  CHECK(z4[0].elements == std::vector<int>{1, 3});
  CHECK(z4[1].elements == std::vector<int>{1, 2, 3});
  int z2 = 0;
  enumerate_connection_sets(AbelianGroup({2}), true, false, [&](const ConnectionSet&) { ++z2; });
  CHECK(z2 == 1);
  int z3 = 0;
  enumerate_connection_sets(AbelianGroup({3}), true, true, [&](const ConnectionSet&) { ++z3; });
  CHECK(z3 == 0);
  // Without the connectivity filter every inverse-closed set appears: 2^(orbits) sets.
  int all = 0;
  enumerate_connection_sets(AbelianGroup({2, 2}), false, false, [&](const ConnectionSet&) { ++all; });
  CHECK(all == 8);
  CHECK_THROWS_AS(enumerate_connection_sets(AbelianGroup({32}), true, false, [](const ConnectionSet&) {}), SizeLimitError);
}

TEST_CASE("Cayley graphs and circulants") {
  CHECK(circulant(6, {1, 5}) == cycle_graph(6));
  CHECK(is_isomorphic(circulant(6, {1, 3, 5}), complete_bipartite(3, 3)));
  CHECK(is_bipartite_circulant_predicate(8, {1, 3, 5, 7}));
  CHECK_FALSE(is_bipartite_circulant_predicate(8, {1, 2, 6, 7}));
  CHECK_FALSE(is_bipartite_circulant_predicate(7, {1, 6}));
  const AbelianGroup g = AbelianGroup::parse("2x4");
  const Graph x = cayley_graph(g, ConnectionSet::parse(g, "(1,0),(0,1),(0,3)"));
  CHECK(is_isomorphic(x, cube_graph()));
  for (int n = 4; n <= 20; n += 2) {
    std::vector<int> odd;
    for (int i = 1; i < n; i += 2) odd.push_back(i);
    CHECK(is_bipartite(circulant(n, odd)) == is_bipartite_circulant_predicate(n, odd));
  }
}

TEST_CASE("(l,t)-cycles") {
  CHECK(LtSpec{2, 1}.valid());
  CHECK(LtSpec{8, 3}.valid());
  CHECK_FALSE(LtSpec{4, 1}.valid());
  CHECK_FALSE(LtSpec{6, 2}.valid());
  CHECK_FALSE(LtSpec{10, 1}.valid());
  CHECK_FALSE(LtSpec{8, 0}.valid());
  CHECK_THROWS_AS(lt_cycle({6, 1}), GraphError);
  CHECK(lt_cycle({2, 3}) == complete_bipartite(3, 3));
  CHECK(lt_cycle({8, 1}) == cycle_graph(8));
  const Graph x = lt_cycle({8, 3});
  CHECK(x.order() == 24);
  CHECK(x.regular_degree() == 6);
  CHECK(lex_product(cycle_graph(8), Graph(3)) == x);
  for (int l : {2, 8, 12, 16, 20})
    for (int t = 1; t <= 3; ++t) {
      const auto spec = recognize_lt_cycle(lt_cycle({l, t}));
      REQUIRE(spec.has_value());
      CHECK(*spec == LtSpec{l, t});
    }
  std::mt19937_64 rng(41);
  const Graph shuffled = x.permuted(oracle::random_permutation(rng, 24));
  CHECK(recognize_lt_cycle(shuffled) == LtSpec{8, 3});
  CHECK_FALSE(recognize_lt_cycle(cycle_graph(10)).has_value());
  CHECK(recognize_lt_cycle(cycle_graph(4)) == LtSpec{2, 2});
  CHECK_FALSE(recognize_lt_cycle(cube_graph()).has_value());
  CHECK_FALSE(recognize_lt_cycle(complete_bipartite(2, 3)).has_value());
  CHECK_FALSE(recognize_lt_cycle(cycle_graph(6)).has_value());
  CHECK_THROWS_AS(recognize_lt_cycle(Graph(2)), GraphError);
}

TEST_CASE("classification at small orders") {
  const auto r6 = verify_main_theorem(6);
  CHECK(r6.ok());
  const auto r8 = verify_main_theorem(8);
  CHECK(r8.ok());
  CHECK(r8.balanced > 0);
  CHECK(r8.balanced == r8.recognized);
  // Cay(Z6,{1,5}) = C6 is unbalanced, Cay(Z6,{1,3,5}) = K_{3,3} is balanced.
  CHECK_FALSE(is_balanced(circulant(6, {1, 5})).balanced);
  CHECK(recognize_lt_cycle(circulant(6, {1, 3, 5})) == LtSpec{2, 3});
  CHECK(recognize_lt_cycle(circulant(8, {1, 7})) == LtSpec{8, 1});
  CHECK(recognize_lt_cycle(circulant(2, {1})) == LtSpec{2, 1});
  const auto r2 = verify_main_theorem(2);
  CHECK(r2.instances == 1);
  CHECK(r2.balanced == 1);
  CHECK_THROWS_AS(verify_main_theorem(33), SizeLimitError);
}

TEST_CASE("verification is independent of the job count") {
  const auto a = verify_main_theorem(12, 1);
  const auto b = verify_main_theorem(12, 3);
  CHECK(a.instances == b.instances);
  CHECK(a.balanced == b.balanced);
  CHECK(a.recognized == b.recognized);
}

TEST_CASE("circulant lemmas at small orders") {
  const auto r = verify_circulant_lemmas(24);
  CHECK(r.ok());
  CHECK(r.balanced > 0);
  // Balanced circulants with 1 in S and |S| > 2 avoiding 3: S = {il +- 1} for l = 8 on Z16.
  CHECK(is_balanced(circulant(16, {1, 7, 9, 15})).balanced);
  CHECK(recognize_lt_cycle(circulant(16, {1, 7, 9, 15})) == LtSpec{8, 2});
  CHECK_FALSE(is_balanced(circulant(16, {1, 5, 11, 15})).balanced);
}
