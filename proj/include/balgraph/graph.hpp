#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace balgraph {

using Vertex = int;
using Bits = std::uint64_t;

/// Adjacency rows are single machine words.
inline constexpr int kMaxVertices = 64;

inline constexpr Bits bit(Vertex v) { return Bits{1} << v; }
inline constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
inline int popcount(Bits b) { return std::popcount(b); }
inline Vertex lowest(Bits b) { return std::countr_zero(b); }

/// Calls fn(v) for every set bit of `b`, in ascending order.
template <class Fn>
inline void for_each_bit(Bits b, Fn&& fn) {
  while (b) {
    fn(static_cast<Vertex>(std::countr_zero(b)));
    b &= b - 1;
  }
}

std::vector<Vertex> bits_to_vector(Bits b);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Endpoint order is normalized so that u < v.
  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Thrown for malformed input (bad endpoints, bad vertex sets, violated preconditions).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input exceeds a supported size bound.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Validates symmetry and irreflexivity.
  static Graph from_rows(std::vector<Bits> rows);

  int order() const { return n_; }
  Bits vertices() const { return low_bits(n_); }
  Bits neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(Vertex v) const { return popcount(neighbors(v)); }
  int edge_count() const;
  int min_degree() const;
  int max_degree() const;
  /// Degree if every vertex has the same degree.
  std::optional<int> regular_degree() const;
  std::vector<Edge> edges() const;
  std::span<const Bits> rows() const { return adj_; }

  /// Relabels so that vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Bits> adj_;
};

struct Bipartition {
  /// side[v] in {0,1}; vertex 0 is on side 0.
  std::vector<int> side;

  Bits side_mask(int s) const;
};

/// Certificate that a graph is not bipartite: a closed walk of odd length,
/// listed without repeating the start vertex at the end.
struct OddClosedWalk {
  std::vector<Vertex> walk;
};

using BipartitionResult = std::variant<Bipartition, OddClosedWalk>;

/// 2-colors a connected graph. Throws GraphError on disconnected input.
BipartitionResult bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced by `mask`.
bool is_connected_within(const Graph& g, Bits mask);
/// Vertex sets of the connected components, ordered by minimum member.
std::vector<Bits> components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, Bits vertex_set);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertex_set);

/// Removes u; remaining vertices keep their relative order.
Graph delete_vertex(const Graph& g, Vertex u);
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

struct TwinPartition {
  /// Each class as a vertex mask, sorted by minimum member.
  std::vector<Bits> classes;

  bool has_nontrivial_twins() const;
};

TwinPartition twin_classes(const Graph& g);
/// One vertex per twin class (in class order); classes adjacent iff their members are.
Graph twin_quotient(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Minimum number of vertices whose removal disconnects g (n-1 for complete graphs).
/// Throws GraphError on disconnected input or n < 2.
int vertex_connectivity(const Graph& g);
/// All vertex pairs whose removal disconnects g.
std::vector<Edge> two_cuts(const Graph& g);

// Common constructions.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cube_graph();

}  // namespace balgraph
