#include "balgraph/graph.hpp"

#include <algorithm>
#include <string>

namespace balgraph {

namespace {

void check_order(int n) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  if (n > kMaxVertices)
    throw SizeLimitError("graph has " + std::to_string(n) + " vertices; limit is " +
                         std::to_string(kMaxVertices));
}

std::string pair_text(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

// Vertices reachable from `start` inside `mask`.
Bits reach(const Graph& g, Vertex start, Bits mask) {
  Bits seen = bit(start);
  Bits frontier = seen;
  while (frontier) {
    Bits next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<Vertex> bits_to_vector(Bits b) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(b)));
  for_each_bit(b, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge " + pair_text(e.u, e.v) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    if (e.u == e.v) throw GraphError("self-loop " + pair_text(e.u, e.v));
    g.adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<Bits> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const Bits all = low_bits(n);
  for (int u = 0; u < n; ++u) {
    const Bits row = rows[static_cast<std::size_t>(u)];
    if (row & ~all) throw GraphError("row " + std::to_string(u) + " references a vertex >= n");
    if (row & bit(u)) throw GraphError("self-loop " + pair_text(u, u));
    for_each_bit(row, [&](Vertex v) {
      if (!((rows[static_cast<std::size_t>(v)] >> u) & 1U))
        throw GraphError("asymmetric adjacency at " + pair_text(u, v));
    });
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Bits row : adj_) twice += popcount(row);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : kMaxVertices;
  for (Bits row : adj_) d = std::min(d, popcount(row));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Bits row : adj_) d = std::max(d, popcount(row));
  return d;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (Bits row : adj_)
    if (popcount(row) != d) return std::nullopt;
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(neighbors(u) & ~low_bits(u + 1), [&](Vertex v) { out.push_back({u, v}); });
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  std::vector<Bits> rows(static_cast<std::size_t>(n_), 0);
  for (Vertex u = 0; u < n_; ++u) {
    Bits row = 0;
    for_each_bit(neighbors(u), [&](Vertex v) { row |= bit(perm[static_cast<std::size_t>(v)]); });
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = row;
  }
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(rows);
  return g;
}

Bits Bipartition::side_mask(int s) const {
  Bits m = 0;
  for (std::size_t v = 0; v < side.size(); ++v)
    if (side[v] == s) m |= bit(static_cast<Vertex>(v));
  return m;
}

BipartitionResult bipartition(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw GraphError("bipartition requires a connected graph");
  Bipartition b;
  b.side.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return b;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{0};
  b.side[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : bits_to_vector(g.neighbors(u))) {
      auto& sv = b.side[static_cast<std::size_t>(v)];
      const int su = b.side[static_cast<std::size_t>(u)];
      if (sv < 0) {
        sv = 1 - su;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      } else if (sv == su) {
        // Tree paths u->root and v->root plus edge uv close an odd walk.
        std::vector<Vertex> up;
        for (Vertex x = u; x >= 0; x = parent[static_cast<std::size_t>(x)]) up.push_back(x);
        std::vector<Vertex> vp;
        for (Vertex x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) vp.push_back(x);
        while (up.size() > 1 && vp.size() > 1 && up[up.size() - 2] == vp[vp.size() - 2]) {
          up.pop_back();
          vp.pop_back();
        }
        // up and vp now end at their lowest common ancestor.
        OddClosedWalk w;
        w.walk.assign(up.begin(), up.end());
        for (auto it = vp.rbegin() + 1; it != vp.rend(); ++it) w.walk.push_back(*it);
        return w;
      }
    }
  }
  return b;
}

bool is_bipartite(const Graph& g) {
  for (Bits comp : components(g)) {
    auto sub = induced_subgraph(g, comp);
    if (std::holds_alternative<OddClosedWalk>(bipartition(sub.graph))) return false;
  }
  return true;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

bool is_connected_within(const Graph& g, Bits mask) {
  if (popcount(mask) <= 1) return true;
  return reach(g, lowest(mask), mask) == mask;
}

std::vector<Bits> components(const Graph& g) {
  std::vector<Bits> out;
  Bits left = g.vertices();
  while (left) {
    const Bits c = reach(g, lowest(left), g.vertices());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, Bits vertex_set) {
  if (vertex_set & ~g.vertices()) throw GraphError("vertex set references a vertex outside the graph");
  InducedSubgraph out;
  out.original = bits_to_vector(vertex_set);
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  std::vector<Bits> rows(out.original.size(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for_each_bit(g.neighbors(out.original[i]) & vertex_set,
                 [&](Vertex v) { rows[i] |= bit(index[static_cast<std::size_t>(v)]); });
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertex_set) {
  Bits mask = 0;
  for (Vertex v : vertex_set) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    mask |= bit(v);
  }
  return induced_subgraph(g, mask);
}

Graph delete_vertex(const Graph& g, Vertex u) {
  if (u < 0 || u >= g.order()) throw GraphError("vertex " + std::to_string(u) + " not in graph");
  return induced_subgraph(g, g.vertices() & ~bit(u)).graph;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw GraphError("edge " + pair_text(e.u, e.v) + " not in graph");
  std::vector<Bits> rows(g.rows().begin(), g.rows().end());
  rows[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
  rows[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
  return Graph::from_rows(std::move(rows));
}

Graph add_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order())
    throw GraphError("edge " + pair_text(e.u, e.v) + " out of range");
  if (e.u == e.v) throw GraphError("self-loop " + pair_text(e.u, e.v));
  std::vector<Bits> rows(g.rows().begin(), g.rows().end());
  rows[static_cast<std::size_t>(e.u)] |= bit(e.v);
  rows[static_cast<std::size_t>(e.v)] |= bit(e.u);
  return Graph::from_rows(std::move(rows));
}

bool TwinPartition::has_nontrivial_twins() const {
  return std::any_of(classes.begin(), classes.end(), [](Bits c) { return popcount(c) >= 2; });
}

TwinPartition twin_classes(const Graph& g) {
  TwinPartition p;
  Bits left = g.vertices();
  while (left) {
    const Vertex u = lowest(left);
    Bits cls = 0;
    for_each_bit(left, [&](Vertex v) {
      if (g.neighbors(v) == g.neighbors(u)) cls |= bit(v);
    });
    p.classes.push_back(cls);
    left &= ~cls;
  }
  return p;
}

Graph twin_quotient(const Graph& g) {
  const auto tp = twin_classes(g);
  const int k = static_cast<int>(tp.classes.size());
  std::vector<Bits> rows(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (g.neighbors(lowest(tp.classes[static_cast<std::size_t>(a)])) & tp.classes[static_cast<std::size_t>(b)])
        rows[static_cast<std::size_t>(a)] |= bit(b);
  return Graph::from_rows(std::move(rows));
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const int du = dist[static_cast<std::size_t>(u)];
      if (2 * du + 1 >= best) break;
      for_each_bit(g.neighbors(u), [&](Vertex v) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = du + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          best = std::min(best, du + dist[static_cast<std::size_t>(v)] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

namespace {

// Calls fn(mask) for every subset of `pool` with exactly k members; stops when fn returns true.
template <class Fn>
bool any_subset_of_size(Bits pool, int k, Fn&& fn, Bits chosen = 0) {
  if (k == 0) return fn(chosen);
  if (popcount(pool) < k) return false;
  const Vertex v = lowest(pool);
  const Bits rest = pool & ~bit(v);
  if (any_subset_of_size(rest, k - 1, fn, chosen | bit(v))) return true;
  return any_subset_of_size(rest, k, fn, chosen);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw GraphError("vertex connectivity needs at least 2 vertices");
  if (!is_connected(g)) throw GraphError("vertex connectivity requires a connected graph");
  const int delta = g.min_degree();
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  const Bits all = g.vertices();
  for (int k = 1; k < delta; ++k) {
    const bool found = any_subset_of_size(all, k, [&](Bits cut) { return !is_connected_within(g, all & ~cut); });
    if (found) return k;
  }
  return delta;
}

std::vector<Edge> two_cuts(const Graph& g) {
  if (!is_connected(g)) throw GraphError("two_cuts requires a connected graph");
  std::vector<Edge> out;
  const Bits all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Bits rest = all & ~bit(u) & ~bit(v);
      if (rest && !is_connected_within(g, rest)) out.push_back({u, v});
    }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(Edge::make(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edges(a + b, e);
}

Graph cube_graph() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int k = 0; k < 3; ++k)
      if (!(v & (1 << k))) e.push_back({v, v | (1 << k)});
  return Graph::from_edges(8, e);
}

}  // namespace balgraph
