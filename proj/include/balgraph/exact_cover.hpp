#pragma once

#include <optional>
#include <vector>

#include "balgraph/graph.hpp"
#include "balgraph/matrix.hpp"

namespace balgraph {

/// Column set whose supports partition the rows: a 0/1 point of
/// {x : Ax = 1, 0 <= x <= 1}.
struct ExactCoverSolution {
  std::vector<int> columns;

  int size() const { return static_cast<int>(columns.size()); }
};

/// Backtracking on the uncovered row with the fewest usable columns, trying
/// columns in ascending index order. nullopt when infeasible.
std::optional<ExactCoverSolution> exact_cover(const ZeroOneMatrix& a);

/// True iff the columns cover every row exactly once.
bool is_exact_cover(const ZeroOneMatrix& a, const std::vector<int>& columns);

struct DivisibilityReport {
  int degree = 0;        // k
  int vertices = 0;      // |V|
  bool balanced = false;
  /// Present when an exact cover of the bipartite adjacency matrix was found.
  std::optional<ExactCoverSolution> cover;
  /// Number of selected columns (t); 0 when no cover.
  int cover_size = 0;
  /// For balanced inputs: cover exists and t*k == |V|/2 (which forces 2k | |V|).
  bool holds = true;
};

/// Runs the exact-cover argument on a connected, regular, bipartite graph.
/// Throws GraphError when the input is not regular or not bipartite.
DivisibilityReport verify_divisibility(const Graph& g);

}  // namespace balgraph
