#include <doctest.h>

#include "balgraph/balance.hpp"
#include "balgraph/canon.hpp"
#include "balgraph/cayley.hpp"
#include "balgraph/census.hpp"
#include "balgraph/exact_cover.hpp"
#include "oracles.hpp"

using namespace balgraph;

namespace {

std::vector<CanonicalForm> raw_forms(int d, int mod, int res) {
  CensusTask task;
  task.vertices = d;
  task.mod = mod;
  task.res = res;
  std::vector<CanonicalForm> out;
  for_each_census_matrix(task, [&](const std::vector<Bits>& rows) { out.push_back(canonical_form(graph_of_rows(rows, d / 2))); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("small censuses") {
  const auto six = enumerate_cubic_bipartite(6);
  REQUIRE(six.size() == 1);
  CHECK(is_isomorphic(six[0], complete_bipartite(3, 3)));
  const auto eight = enumerate_cubic_bipartite(8);
  REQUIRE(eight.size() == 1);
  CHECK(is_isomorphic(eight[0], cube_graph()));
  const std::vector<std::pair<int, long long>> classes{{10, 2}, {12, 5}, {14, 13}, {16, 38}, {18, 149}};
  for (auto [d, c] : classes) CHECK(count_balanced_cubic(d).total == c);
}

TEST_CASE("generator matches the brute-force matrix oracle") {
  for (int d = 6; d <= 14; d += 2) {
    std::set<CanonicalForm> got;
    for (const Graph& g : enumerate_cubic_bipartite(d)) {
      CHECK(g.regular_degree() == 3);
      CHECK(is_connected(g));
      CHECK(is_bipartite(g));
      got.insert(canonical_form(g));
    }
    CHECK(got == oracle::regular_bipartite_classes(d / 2, 3));
  }
  // Other degrees through the same generator.
  for (auto [d, k] : std::vector<std::pair<int, int>>{{8, 2}, {12, 2}, {10, 4}, {12, 4}}) {
    CensusTask task;
    task.vertices = d;
    task.degree = k;
    CHECK(static_cast<std::size_t>(run_census(task).total) == oracle::regular_bipartite_classes(d / 2, k).size());
  }
}

TEST_CASE("balanced counts") {
  CHECK(count_balanced_cubic(6).balanced == 1);
  CHECK(count_balanced_cubic(8).balanced == 0);
  CHECK(count_balanced_cubic(12).balanced == 1);
  const CensusReport r18 = count_balanced_cubic(18);
  CHECK(r18.balanced == 4);
  CHECK(r18.balanced_graphs().size() == 4);
  for (int d : {10, 14, 16}) CHECK(count_balanced_cubic(d).balanced == 0);
}

TEST_CASE("work partition is sound") {
  for (int d : {12, 16, 18}) {
    const auto whole = raw_forms(d, 1, 0);
    for (int mod : {2, 3, 7}) {
      std::vector<CanonicalForm> parts;
      for (int res = 0; res < mod; ++res) {
        const auto p = raw_forms(d, mod, res);
        parts.insert(parts.end(), p.begin(), p.end());
      }
      std::sort(parts.begin(), parts.end());
      CHECK(parts == whole);
    }
  }
  CensusTask t;
  t.vertices = 18;
  t.jobs = 3;
  const CensusReport threaded = run_census(t);
  t.jobs = 1;
  const CensusReport single = run_census(t);
  CHECK(threaded.total == single.total);
  CHECK(threaded.generated == single.generated);
  for (std::size_t i = 0; i < single.graphs.size(); ++i) CHECK(threaded.graphs[i].form == single.graphs[i].form);
}

TEST_CASE("task validation") {
  CHECK_THROWS_AS(enumerate_cubic_bipartite(7), GraphError);
  CHECK_THROWS_AS(enumerate_cubic_bipartite(38), GraphError);
  CHECK_THROWS_AS(enumerate_cubic_bipartite(4), GraphError);
  CensusTask t;
  t.vertices = 12;
  t.mod = 3;
  t.res = 3;
  CHECK_THROWS_AS(t.validate(), GraphError);
  t.res = -1;
  CHECK_THROWS_AS(t.validate(), GraphError);
}

TEST_CASE("conjecture checks at small orders") {
  for (int d : {6, 12, 18}) {
    const CensusReport c = count_balanced_cubic(d);
    const auto twins = check_conjecture_twins(c);
    CHECK(twins.ok());
    CHECK(twins.checked == c.balanced);
    CHECK(twins.with_twins == c.balanced);
    const auto cons = check_conjecture_consequences(c);
    CHECK(cons.ok());
    CHECK(cons.vertex_transitive == (d == 6 ? 1 : 0));
  }
  // (8,3)-cycle: vertex-transitive balanced, recognized.
  const Graph x = lt_cycle({8, 3});
  CHECK(is_vertex_transitive(x));
  CHECK(is_balanced(x).balanced);
  CHECK(recognize_lt_cycle(x) == LtSpec{8, 3});
}

TEST_CASE("balanced census graphs: divisibility and twin deletion") {
  for (int d = 6; d <= 18; d += 2) {
    for (const CensusGraph& g : count_balanced_cubic(d).balanced_graphs()) {
      CHECK(d % 6 == 0);
      const auto r = verify_divisibility(g.graph);
      CHECK(r.holds);
      CHECK(r.cover_size * 6 == d);
      for (Bits c : twin_classes(g.graph).classes) {
        if (popcount(c) < 2) continue;
        const Graph h = delete_vertex(g.graph, lowest(c));
        if (is_connected(h)) CHECK(is_balanced_exhaustive(h).balanced);
      }
    }
  }
}
