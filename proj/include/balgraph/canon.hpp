#pragma once

#include <compare>
#include <string>
#include <vector>

#include "balgraph/graph.hpp"

namespace balgraph {

using Permutation = std::vector<Vertex>;

/// Isomorphism certificate: the adjacency matrix of the canonically relabeled
/// graph, row-major and bit-packed, prefixed by the vertex count.
struct CanonicalForm {
  std::string bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  /// label[v] is the canonical position of vertex v.
  Permutation label;
  CanonicalForm form;
  /// Automorphisms met during the search; not necessarily a generating set.
  std::vector<Permutation> automorphisms;
};

/// Individualization-refinement search over equitable partitions.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Generators of Aut(g), found by searching for a coset representative at
/// each level of the first path of the refinement tree.
std::vector<Permutation> automorphism_generators(const Graph& g);

/// Orbits of the group generated by `generators` on 0..n-1, as masks sorted by minimum member.
std::vector<Bits> orbits(int n, const std::vector<Permutation>& generators);

bool is_vertex_transitive(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace balgraph
