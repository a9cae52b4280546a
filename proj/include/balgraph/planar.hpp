#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "balgraph/canon.hpp"
#include "balgraph/graph.hpp"

namespace balgraph {

struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  bool operator==(const Dart&) const = default;
};

/// Closed boundary walk of one face.
struct FaceWalk {
  std::vector<Dart> darts;

  int length() const { return static_cast<int>(darts.size()); }
  std::vector<Vertex> vertices() const;
};

/// Graph plus a rotation system (cyclic neighbour order at each vertex).
/// Face tracing: the dart after (u->v) is (v->w) where w follows u in the
/// rotation at v. Construction checks that the rotation matches the adjacency
/// and that the traced faces satisfy V - E + F = 1 + #components (a sphere
/// embedding of every component).
class EmbeddedGraph {
 public:
  EmbeddedGraph(Graph g, std::vector<std::vector<Vertex>> rotation);
  /// Builds the graph from the rotation lists themselves.
  static EmbeddedGraph from_rotation(std::vector<std::vector<Vertex>> rotation);
  /// One line per vertex: "v: n1 n2 n3".
  static EmbeddedGraph parse(std::istream& in);

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }
  const std::vector<FaceWalk>& faces() const { return faces_; }
  Vertex successor(Vertex at, Vertex from) const;
  std::string to_text() const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<FaceWalk> faces_;
};

/// Thrown when a rotation system is inconsistent with its graph or is not planar.
class EmbeddingError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Face walks of an embedding (already certified at construction).
const std::vector<FaceWalk>& faces(const EmbeddedGraph& g);

/// The 3-cube with its planar rotation: V=8, E=12, F=6.
EmbeddedGraph cube_seed();

/// Replaces the degree-3 vertex v by the 7-vertex diamond gadget (a cube
/// minus one vertex); v's id is reused for the gadget centre.
EmbeddedGraph diamond_inflation(const EmbeddedGraph& g, Vertex v);

/// Subdivides the edges of darts d1 = (u->v) and d2 = (x->y), which must lie on
/// one face, and joins the new vertices as a ladder rung pair inside that face:
/// u-a-b-v, x-c-d-y, rungs b-c and a-d. On bipartite inputs u and x must share
/// a colour so the result stays bipartite.
EmbeddedGraph a1_subdivision(const EmbeddedGraph& g, Dart d1, Dart d2);
/// Picks the first face carrying both edges where the operation is admissible.
EmbeddedGraph a1_subdivision(const EmbeddedGraph& g, Edge e1, Edge e2);

/// Every admissible (face, dart pair) choice for A1 subdivision.
std::vector<std::pair<Dart, Dart>> a1_sites(const EmbeddedGraph& g);

struct NonPlanar {};
/// Planar embedding of a connected graph, or nullopt when non-planar.
std::optional<EmbeddedGraph> planarity_test(const Graph& g);
bool is_planar(const Graph& g);

/// The subgraph formed by v, its three neighbours, and the three face
/// boundary paths joining consecutive neighbours around v.
struct SvSubgraph {
  Vertex center = 0;
  Bits vertices = 0;
  std::vector<Edge> edges;

  /// Subgraph with exactly the S_v edges, relabeled in ascending vertex order.
  Graph as_graph(const Graph& parent) const;
  /// True if no edge of `parent` joins two S_v vertices outside the S_v edge set.
  bool is_induced_in(const Graph& parent) const;
};

/// Requires deg(v) = 3 and three distinct faces at v.
SvSubgraph s_v_subgraph(const EmbeddedGraph& g, Vertex v);

struct PlanarCheck {
  bool cubic = false;
  bool bipartite = false;
  bool three_connected = false;
  bool unbalanced = false;
  bool edge_deletions_unbalanced = false;
  bool sv_induced = false;
  bool sv_unbalanced = false;
  bool sv_intersection_empty = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks the S_v facts and unbalancedness (of g and of every g minus an edge).
PlanarCheck verify_sv_claims(const EmbeddedGraph& g);

struct BatageljResult {
  std::vector<EmbeddedGraph> graphs;  // sorted by (order, canonical form)
  long long applications = 0;
  long long rejected = 0;  // children failing certification
};

/// Closure of the cube under diamond inflation and A1 subdivision, up to
/// isomorphism, keeping graphs with at most max_vertices vertices.
BatageljResult batagelj_enumerate(int max_vertices);

struct DecompositionReport {
  Edge cut;
  Bits component = 0;  // vertex set of Y in the input graph
  Vertex a = 0;        // a, b in Y, non-adjacent
  Vertex b = 0;
  Graph closed;        // Y + ab, relabeled
  int triples_found = 0;
};

/// For a cubic bipartite planar graph of connectivity 2: a 2-cut {u,v}, a
/// component Y of X - {u,v} and non-adjacent a, b in Y with Y + ab cubic,
/// 3-connected, bipartite and planar. nullopt when the connectivity is not 2.
/// Throws GraphError if the input is not cubic, bipartite and planar, or if
/// no such triple exists.
std::optional<DecompositionReport> two_cut_decompose(const Graph& g);

/// Joins two graphs that each have exactly two degree-2 vertices: the
/// i-th degree-2 vertex of `a` is joined to the i-th of `b`.
Graph join_across_two_cut(const Graph& a, const Graph& b);

}  // namespace balgraph
