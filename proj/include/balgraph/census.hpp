#pragma once

#include <functional>
#include <string>
#include <vector>

#include "balgraph/canon.hpp"
#include "balgraph/graph.hpp"

namespace balgraph {

struct CensusTask {
  int vertices = 6;  // d: even, 4 <= d <= 36
  int degree = 3;
  bool connected_only = true;
  int mod = 1;  // work partition: explore subtrees with index = res (mod `mod`)
  int res = 0;
  int jobs = 1;

  /// Throws GraphError naming the offending field.
  void validate() const;
};

struct CensusGraph {
  Graph graph;
  CanonicalForm form;
  bool balanced = false;
};

struct CensusReport {
  int d = 0;
  long long total = 0;     // isomorphism classes found
  long long balanced = 0;  // f(d) for this partition
  long long generated = 0; // matrices accepted before deduplication
  std::vector<CensusGraph> graphs;  // sorted by canonical form

  std::vector<CensusGraph> balanced_graphs() const;
};

/// Connected k-regular bipartite graphs on d vertices, one per isomorphism class
/// (within a partition: one per class met by that partition). Generated from
/// doubly-lexical (d/2)x(d/2) biadjacency matrices, then canonically deduplicated.
CensusReport run_census(const CensusTask& task);

/// Raw generator: calls visit(matrix rows) for every accepted doubly-lexical
/// matrix before any deduplication. Row masks use bit (m-1-j) for column j.
/// Returns the number of matrices visited.
long long for_each_census_matrix(const CensusTask& task, const std::function<void(const std::vector<Bits>&)>& visit);

/// Graph with row vertices 0..m-1 and column vertices m..2m-1.
Graph graph_of_rows(const std::vector<Bits>& rows, int m);

std::vector<Graph> enumerate_cubic_bipartite(int d, int mod = 1, int res = 0);
CensusReport count_balanced_cubic(int d, int jobs = 1);

struct ConjectureViolation {
  std::string graph6;
  std::string detail;
};

struct ConjectureReport {
  int d = 0;
  long long checked = 0;
  long long with_twins = 0;
  long long vertex_transitive = 0;
  std::vector<ConjectureViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Every balanced census graph must have a twin class of size >= 2.
ConjectureReport check_conjecture_twins(const CensusReport& census);
ConjectureReport check_conjecture_twins(int d);
/// Every balanced census graph has girth 4; a vertex-transitive one must be
/// K_{3,3} and must be recognized as an (l,t)-cycle.
ConjectureReport check_conjecture_consequences(const CensusReport& census);
ConjectureReport check_conjecture_consequences(int d);

}  // namespace balgraph
