#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "balgraph/graph.hpp"
#include "balgraph/matrix.hpp"

namespace balgraph {

/// Chordless cycle, listed from its minimum vertex towards the smaller of
/// that vertex's two cycle neighbours.
struct InducedCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const InducedCycle&) const = default;
};

/// True if `c` is a cycle of g (length >= 3, distinct vertices) with no chords.
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& c);

/// Visits every induced cycle of length <= max_len exactly once; the visitor
/// returns false to stop early. Returns false if stopped.
bool for_each_induced_cycle(const Graph& g, std::optional<int> max_len,
                            const std::function<bool(const InducedCycle&)>& visit);
std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, std::optional<int> max_len = std::nullopt);

struct Balanced {};
struct BadCycle {
  InducedCycle cycle;
};
struct NotBipartite {
  OddClosedWalk walk;
};

struct BalanceReport {
  bool balanced = false;
  std::variant<Balanced, BadCycle, NotBipartite> reason;
};

/// Balanced iff bipartite with no induced cycle of length 2 (mod 4).
/// Throws GraphError on disconnected input.
/// Twin classes are collapsed to one representative before the cycle search.
BalanceReport is_balanced(const Graph& g);
/// Same answer without the twin reduction: searches every chordless cycle of g.
BalanceReport is_balanced_exhaustive(const Graph& g);

/// Same test without the connectivity requirement (each component checked).
bool is_balanced_any(const Graph& g);

/// Rows are side 0 in ascending vertex order, columns side 1.
ZeroOneMatrix bipartite_adjacency_matrix(const Graph& g, const Bipartition& b);

/// Inverse of bipartite_adjacency_matrix: rows become vertices 0..r-1, columns r..r+c-1.
Graph graph_of_matrix(const ZeroOneMatrix& a);

/// Matrix-side definition of balance by exhaustive row/column subset search:
/// every minimal submatrix with exactly two ones per row and column must have
/// entry sum divisible by 4. Limited to 8x8.
bool matrix_is_balanced_oracle(const ZeroOneMatrix& a);

}  // namespace balgraph
