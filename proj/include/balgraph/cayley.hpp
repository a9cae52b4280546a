#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balgraph/graph.hpp"

namespace balgraph {

/// Finite abelian group Z_{d1} x ... x Z_{dk} in invariant-factor form
/// (each d_i >= 2 divides d_{i+1}). Elements are written additively.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> orders);
  /// Parses "d1xd2x...xdk".
  static AbelianGroup parse(std::string_view spec);
  /// One representative per isomorphism class of abelian groups of order n.
  static std::vector<AbelianGroup> all_of_order(int n);

  const std::vector<int>& orders() const { return orders_; }
  int order() const { return order_; }
  std::string to_string() const;

  using Element = std::vector<int>;
  /// Elements are indexed in lexicographic coordinate order (first coordinate most significant).
  int index(const Element& x) const;
  Element element(int index) const;

  Element identity() const { return Element(orders_.size(), 0); }
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  /// 0x, 1x, 2x, ... up to (but excluding) the first repeat.
  std::vector<Element> multiples(const Element& x) const;
  int element_order(const Element& x) const;

  int add_index(int x, int y) const;
  int negate_index(int x) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  void check(const Element& x) const;

  std::vector<int> orders_;
  int order_ = 1;
};

/// Identity-free, inverse-closed subset, stored as sorted element indices.
struct ConnectionSet {
  std::vector<int> elements;

  /// Throws GraphError if the identity is present or the set is not inverse-closed.
  static ConnectionSet make(const AbelianGroup& g, std::vector<int> elements);
  /// Parses comma-separated coordinate tuples such as "(0,1),(1,0)"; plain
  /// integers are accepted for cyclic groups, e.g. "1,3,5".
  static ConnectionSet parse(const AbelianGroup& g, std::string_view text);
  std::string to_string(const AbelianGroup& g) const;
  bool contains(int x) const;
  auto operator<=>(const ConnectionSet&) const = default;
};

/// Vertex i is the group element with index i; x ~ y iff x - y is in s.
Graph cayley_graph(const AbelianGroup& g, const ConnectionSet& s);
Graph circulant(int n, const std::vector<int>& residues);
/// n even and every residue odd.
bool is_bipartite_circulant_predicate(int n, const std::vector<int>& residues);

/// Vertices (x, y) ordered x-major; adjacency x~x', or x = x' and y~y'.
Graph lex_product(const Graph& x, const Graph& y);

struct LtSpec {
  int l = 2;
  int t = 1;

  /// l = 2, or l divisible by 4 and at least 8; t >= 1.
  bool valid() const;
  auto operator<=>(const LtSpec&) const = default;
};

/// Lexicographic product of the l-cycle (K2 when l = 2) with t independent vertices.
Graph lt_cycle(LtSpec spec);
/// Recognizes (l,t)-cycles via the twin quotient; complete bipartite graphs report l = 2.
/// Throws GraphError on disconnected input.
std::optional<LtSpec> recognize_lt_cycle(const Graph& g);

/// Calls visit(set) for every identity-free inverse-closed subset, optionally
/// restricted to generating sets and/or sets giving bipartite Cayley graphs.
/// Throws SizeLimitError when the group order exceeds `max_order`.
void enumerate_connection_sets(const AbelianGroup& g, bool require_connected, bool require_bipartite,
                               const std::function<void(const ConnectionSet&)>& visit, int max_order = 24);
/// True when the set generates the whole group.
bool generates(const AbelianGroup& g, const ConnectionSet& s);

struct Counterexample {
  std::string group;
  std::string set;
  std::string detail;
};

struct VerificationReport {
  int groups = 0;
  long long instances = 0;
  long long balanced = 0;
  long long recognized = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// For every abelian group of order <= max_order and every generating
/// connection set: balanced iff recognized as an (l,t)-cycle.
VerificationReport verify_main_theorem(int max_order, int jobs = 1);

/// Bipartite circulants with 1 in S, n <= max_n:
///  balanced and 3 in S => K_{n/2,n/2};
///  balanced, 3 not in S, |S| > 1 => with l the least l > 2 having l-1 in S:
///     l = 0 mod 4, l >= 8, l | n and S = {il +- 1};
///  balanced <=> recognized as an (l,t)-cycle.
VerificationReport verify_circulant_lemmas(int max_n);

}  // namespace balgraph
