#include "balgraph/planar.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "balgraph/balance.hpp"

namespace balgraph {

namespace {

using Rotation = std::vector<std::vector<Vertex>>;

std::string edge_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

Graph graph_of_rotation(const Rotation& rot) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < rot.size(); ++u)
    for (Vertex v : rot[u]) {
      if (v < 0 || v >= static_cast<Vertex>(rot.size()))
        throw EmbeddingError("rotation at " + std::to_string(u) + " names vertex " + std::to_string(v));
      edges.push_back(Edge::make(static_cast<Vertex>(u), v));
    }
  return Graph::from_edges(static_cast<int>(rot.size()), edges);
}

void replace_in(std::vector<Vertex>& list, Vertex from, Vertex to) {
  auto it = std::find(list.begin(), list.end(), from);
  if (it == list.end()) throw EmbeddingError("rotation entry " + std::to_string(from) + " missing");
  *it = to;
}

// Makes `q` the successor of `prev` in a rotation list.
void insert_after(std::vector<Vertex>& list, Vertex prev, Vertex q) {
  auto it = std::find(list.begin(), list.end(), prev);
  if (it == list.end()) throw EmbeddingError("rotation entry " + std::to_string(prev) + " missing");
  list.insert(it + 1, q);
}

Vertex subdivide(Rotation& rot, Vertex u, Vertex v) {
  const Vertex w = static_cast<Vertex>(rot.size());
  replace_in(rot[static_cast<std::size_t>(u)], v, w);
  replace_in(rot[static_cast<std::size_t>(v)], u, w);
  rot.push_back({u, v});
  return w;
}

bool is_cubic(const Graph& g) { return g.order() > 0 && g.regular_degree() == 3; }

bool is_three_connected(const Graph& g) { return g.order() >= 4 && is_connected(g) && vertex_connectivity(g) >= 3; }

}  // namespace

std::vector<Vertex> FaceWalk::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.from);
  return out;
}

EmbeddedGraph::EmbeddedGraph(Graph g, Rotation rotation) : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.order();
  if (static_cast<int>(rotation_.size()) != n) throw EmbeddingError("rotation size does not match vertex count");
  for (Vertex v = 0; v < n; ++v) {
    Bits listed = 0;
    for (Vertex w : rotation_[static_cast<std::size_t>(v)]) {
      if (w < 0 || w >= n || (listed & bit(w)))
        throw EmbeddingError("rotation at " + std::to_string(v) + " is not a list of distinct vertices");
      listed |= bit(w);
    }
    if (listed != graph_.neighbors(v))
      throw EmbeddingError("rotation at " + std::to_string(v) + " does not list its neighbours");
  }
  // Trace faces; each dart is used exactly once.
  std::map<std::pair<Vertex, Vertex>, bool> used;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rotation_[static_cast<std::size_t>(u)]) {
      if (used[{u, v}]) continue;
      FaceWalk f;
      Dart d{u, v};
      while (!used[{d.from, d.to}]) {
        used[{d.from, d.to}] = true;
        f.darts.push_back(d);
        d = Dart{d.to, successor(d.to, d.from)};
      }
      if (!(d == Dart{u, v})) throw EmbeddingError("face tracing did not close at dart " + edge_text(u, v));
      faces_.push_back(std::move(f));
    }
  const int isolated = static_cast<int>(std::count_if(rotation_.begin(), rotation_.end(), [](const auto& r) { return r.empty(); }));
  const int comps = static_cast<int>(components(graph_).size());
  // Isolated vertices contribute no darts but do bound one face each.
  const int f = static_cast<int>(faces_.size()) + isolated;
  if (n - graph_.edge_count() + f != 1 + comps)
    throw EmbeddingError("rotation system is not planar: V - E + F = " + std::to_string(n - graph_.edge_count() + f));
}

EmbeddedGraph EmbeddedGraph::from_rotation(Rotation rotation) {
  Graph g = graph_of_rotation(rotation);
  return EmbeddedGraph(std::move(g), std::move(rotation));
}

EmbeddedGraph EmbeddedGraph::parse(std::istream& in) {
  std::map<int, std::vector<Vertex>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw EmbeddingError("rotation line '" + line + "' lacks ':'");
    std::istringstream head(line.substr(0, colon));
    int v = -1;
    if (!(head >> v) || v < 0) throw EmbeddingError("bad vertex id in rotation line '" + line + "'");
    std::istringstream tail(line.substr(colon + 1));
    std::vector<Vertex> nbrs;
    std::string tok;
    while (tail >> tok) {
      try {
        std::size_t used = 0;
        const int w = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nbrs.push_back(w);
      } catch (const std::exception&) {
        throw EmbeddingError("bad neighbour '" + tok + "' in rotation line '" + line + "'");
      }
    }
    lines[v] = std::move(nbrs);
  }
  Rotation rot(lines.size());
  for (auto& [v, nbrs] : lines) {
    if (v >= static_cast<int>(rot.size())) throw EmbeddingError("rotation vertex ids must be 0..n-1");
    rot[static_cast<std::size_t>(v)] = std::move(nbrs);
  }
  return from_rotation(std::move(rot));
}

Vertex EmbeddedGraph::successor(Vertex at, Vertex from) const {
  const auto& r = rotation_[static_cast<std::size_t>(at)];
  auto it = std::find(r.begin(), r.end(), from);
  if (it == r.end()) throw EmbeddingError(edge_text(at, from) + " is not an edge");
  ++it;
  return it == r.end() ? r.front() : *it;
}

std::string EmbeddedGraph::to_text() const {
  std::string out;
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    out += std::to_string(v) + ":";
    for (Vertex w : rotation_[v]) out += " " + std::to_string(w);
    out += "\n";
  }
  return out;
}

const std::vector<FaceWalk>& faces(const EmbeddedGraph& g) { return g.faces(); }

EmbeddedGraph cube_seed() {
  // Outer square 0..3 and inner square 4..7, counter-clockwise around each vertex.
  const double xy[8][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {.5, .5}, {-.5, .5}, {-.5, -.5}, {.5, -.5}};
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.push_back(Edge::make(i, (i + 1) % 4));
    edges.push_back(Edge::make(4 + i, 4 + (i + 1) % 4));
    edges.push_back({i, i + 4});
  }
  Graph g = Graph::from_edges(8, edges);
  Rotation rot(8);
  for (Vertex v = 0; v < 8; ++v) {
    rot[static_cast<std::size_t>(v)] = bits_to_vector(g.neighbors(v));
    auto angle = [&](Vertex w) { return std::atan2(xy[w][1] - xy[v][1], xy[w][0] - xy[v][0]); };
    std::sort(rot[static_cast<std::size_t>(v)].begin(), rot[static_cast<std::size_t>(v)].end(),
              [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return EmbeddedGraph(std::move(g), std::move(rot));
}

EmbeddedGraph diamond_inflation(const EmbeddedGraph& g, Vertex v) {
  if (v < 0 || v >= g.graph().order()) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  if (g.graph().degree(v) != 3) throw GraphError("diamond inflation needs a degree-3 vertex, got degree " + std::to_string(g.graph().degree(v)));
  Rotation rot = g.rotation();
  const auto nb = rot[static_cast<std::size_t>(v)];
  const Vertex a = nb[0], b = nb[1], c = nb[2];
  const Vertex n = g.graph().order();
  // Gadget: centre v joined to x, y, z; ports pa, pb, pc carry the old edges.
  const Vertex x = n, y = n + 1, z = n + 2, pc = n + 3, pb = n + 4, pa = n + 5;
  rot.resize(static_cast<std::size_t>(n + 6));
  rot[static_cast<std::size_t>(v)] = {y, z, x};
  rot[static_cast<std::size_t>(pa)] = {a, z, y};
  rot[static_cast<std::size_t>(y)] = {pa, v, pc};
  rot[static_cast<std::size_t>(z)] = {pa, pb, v};
  rot[static_cast<std::size_t>(x)] = {pc, v, pb};
  rot[static_cast<std::size_t>(pc)] = {y, x, c};
  rot[static_cast<std::size_t>(pb)] = {z, b, x};
  replace_in(rot[static_cast<std::size_t>(a)], v, pa);
  replace_in(rot[static_cast<std::size_t>(b)], v, pb);
  replace_in(rot[static_cast<std::size_t>(c)], v, pc);
  return EmbeddedGraph::from_rotation(std::move(rot));
}

namespace {

// Index of the face containing dart d.
std::size_t face_of(const EmbeddedGraph& g, Dart d) {
  const auto& fs = g.faces();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (std::find(fs[i].darts.begin(), fs[i].darts.end(), d) != fs[i].darts.end()) return i;
  throw GraphError("dart " + edge_text(d.from, d.to) + " is not in the graph");
}

// Colour-compatibility of the two darts on bipartite inputs.
bool a1_admissible(const EmbeddedGraph& g, const std::vector<int>* side, Dart d1, Dart d2) {
  const Bits e1 = bit(d1.from) | bit(d1.to);
  const Bits e2 = bit(d2.from) | bit(d2.to);
  if (e1 & e2) return false;
  if (side && (*side)[static_cast<std::size_t>(d1.from)] != (*side)[static_cast<std::size_t>(d2.from)]) return false;
  (void)g;
  return true;
}

std::optional<std::vector<int>> sides_of(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  auto bp = bipartition(g);
  if (auto* b = std::get_if<Bipartition>(&bp)) return b->side;
  return std::nullopt;
}

}  // namespace

EmbeddedGraph a1_subdivision(const EmbeddedGraph& g, Dart d1, Dart d2) {
  const Graph& gr = g.graph();
  for (const Dart& d : {d1, d2})
    if (d.from < 0 || d.to < 0 || d.from >= gr.order() || d.to >= gr.order() || !gr.adjacent(d.from, d.to))
      throw GraphError("A1 subdivision: " + edge_text(d.from, d.to) + " is not an edge");
  if ((bit(d1.from) | bit(d1.to)) & (bit(d2.from) | bit(d2.to)))
    throw GraphError("A1 subdivision needs non-adjacent edges, got " + edge_text(d1.from, d1.to) + " and " +
                     edge_text(d2.from, d2.to));
  if (face_of(g, d1) != face_of(g, d2))
    throw GraphError("A1 subdivision needs co-facial darts " + edge_text(d1.from, d1.to) + " and " + edge_text(d2.from, d2.to));
  const auto side = sides_of(gr);
  if (!a1_admissible(g, side ? &*side : nullptr, d1, d2))
    throw GraphError("A1 subdivision on these darts would break bipartiteness");

  Rotation rot = g.rotation();
  const Vertex u = d1.from, v = d1.to, x = d2.from, y = d2.to;
  const Vertex a = subdivide(rot, u, v);
  const Vertex b = subdivide(rot, a, v);
  const Vertex c = subdivide(rot, x, y);
  const Vertex d = subdivide(rot, c, y);
  insert_after(rot[static_cast<std::size_t>(b)], a, c);
  insert_after(rot[static_cast<std::size_t>(c)], x, b);
  insert_after(rot[static_cast<std::size_t>(a)], u, d);
  insert_after(rot[static_cast<std::size_t>(d)], c, a);
  return EmbeddedGraph::from_rotation(std::move(rot));
}

EmbeddedGraph a1_subdivision(const EmbeddedGraph& g, Edge e1, Edge e2) {
  if (!g.graph().adjacent(e1.u, e1.v) || !g.graph().adjacent(e2.u, e2.v))
    throw GraphError("A1 subdivision: both arguments must be edges");
  if ((bit(e1.u) | bit(e1.v)) & (bit(e2.u) | bit(e2.v)))
    throw GraphError("A1 subdivision needs non-adjacent edges, got " + edge_text(e1.u, e1.v) + " and " + edge_text(e2.u, e2.v));
  for (const auto& [d1, d2] : a1_sites(g)) {
    if (Edge::make(d1.from, d1.to) == Edge::make(e1.u, e1.v) && Edge::make(d2.from, d2.to) == Edge::make(e2.u, e2.v))
      return a1_subdivision(g, d1, d2);
  }
  throw GraphError("A1 subdivision: edges " + edge_text(e1.u, e1.v) + " and " + edge_text(e2.u, e2.v) +
                   " share no face where the operation is admissible");
}

std::vector<std::pair<Dart, Dart>> a1_sites(const EmbeddedGraph& g) {
  const auto side = sides_of(g.graph());
  std::vector<std::pair<Dart, Dart>> out;
  for (const FaceWalk& f : g.faces())
    for (std::size_t i = 0; i < f.darts.size(); ++i)
      for (std::size_t j = 0; j < f.darts.size(); ++j) {
        if (i == j) continue;
        const Dart d1 = f.darts[i], d2 = f.darts[j];
        if (a1_admissible(g, side ? &*side : nullptr, d1, d2)) out.emplace_back(d1, d2);
      }
  return out;
}

std::optional<EmbeddedGraph> planarity_test(const Graph& g) {
  if (!is_connected(g)) throw GraphError("planarity test requires a connected graph");
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                       boost::property<boost::edge_index_t, int>>;
  const int n = g.order();
  BGraph bg(static_cast<std::size_t>(n));
  int idx = 0;
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), idx++, bg);
  using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(static_cast<std::size_t>(n));
  const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                          boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) return std::nullopt;
  Rotation rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (const EdgeDesc& e : embedding[static_cast<std::size_t>(v)]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      rot[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
    }
  // The constructor certifies the embedding.
  return EmbeddedGraph(g, std::move(rot));
}

bool is_planar(const Graph& g) {
  for (Bits comp : components(g))
    if (!planarity_test(induced_subgraph(g, comp).graph)) return false;
  return true;
}

Graph SvSubgraph::as_graph(const Graph& parent) const {
  const auto verts = bits_to_vector(vertices);
  std::vector<int> index(static_cast<std::size_t>(parent.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<Edge> e;
  for (const Edge& x : edges) e.push_back(Edge::make(index[static_cast<std::size_t>(x.u)], index[static_cast<std::size_t>(x.v)]));
  return Graph::from_edges(static_cast<int>(verts.size()), e);
}

bool SvSubgraph::is_induced_in(const Graph& parent) const {
  return induced_subgraph(parent, vertices).graph == as_graph(parent);
}

SvSubgraph s_v_subgraph(const EmbeddedGraph& g, Vertex v) {
  if (v < 0 || v >= g.graph().order()) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  if (g.graph().degree(v) != 3) throw GraphError("S_v needs a degree-3 vertex, got degree " + std::to_string(g.graph().degree(v)));
  const auto& w = g.rotation()[static_cast<std::size_t>(v)];
  SvSubgraph s;
  s.center = v;
  s.vertices = bit(v);
  std::vector<std::size_t> face_ids;
  for (int i = 0; i < 3; ++i) {
    const Vertex wi = w[static_cast<std::size_t>(i)];
    const Vertex next = w[static_cast<std::size_t>((i + 1) % 3)];
    s.edges.push_back(Edge::make(v, wi));
    face_ids.push_back(face_of(g, Dart{v, next}));
    // Walk the face from (v -> next) until it returns through (wi -> v).
    Dart d{next, g.successor(next, v)};
    s.vertices |= bit(next);
    while (!(d == Dart{wi, v})) {
      if (d.to == v || d.from == v) throw GraphError("face at vertex " + std::to_string(v) + " revisits it; S_v undefined");
      s.edges.push_back(Edge::make(d.from, d.to));
      s.vertices |= bit(d.to);
      d = Dart{d.to, g.successor(d.to, d.from)};
    }
  }
  std::sort(face_ids.begin(), face_ids.end());
  if (std::unique(face_ids.begin(), face_ids.end()) != face_ids.end())
    throw GraphError("faces at vertex " + std::to_string(v) + " are not distinct");
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

PlanarCheck verify_sv_claims(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  PlanarCheck r;
  r.cubic = is_cubic(g);
  r.bipartite = is_connected(g) && is_bipartite(g);
  r.three_connected = is_three_connected(g);
  if (!r.cubic) r.failures.push_back("not cubic");
  if (!r.bipartite) r.failures.push_back("not bipartite");
  if (!r.three_connected) r.failures.push_back("not 3-connected");
  if (!r.ok()) return r;

  r.unbalanced = !is_balanced(g).balanced;
  if (!r.unbalanced) r.failures.push_back("graph is balanced");
  r.edge_deletions_unbalanced = true;
  for (const Edge& e : g.edges()) {
    if (is_balanced_any(delete_edge(g, e))) {
      r.edge_deletions_unbalanced = false;
      r.failures.push_back("deleting edge " + edge_text(e.u, e.v) + " leaves a balanced graph");
    }
  }
  r.sv_induced = true;
  r.sv_unbalanced = true;
  std::vector<Edge> common;
  bool first = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    const SvSubgraph s = s_v_subgraph(eg, v);
    if (!s.is_induced_in(g)) {
      r.sv_induced = false;
      r.failures.push_back("S_" + std::to_string(v) + " is not induced");
    }
    if (is_balanced(s.as_graph(g)).balanced) {
      r.sv_unbalanced = false;
      r.failures.push_back("S_" + std::to_string(v) + " is balanced");
    }
    if (first) {
      common = s.edges;
      first = false;
    } else {
      std::vector<Edge> keep;
      std::set_intersection(common.begin(), common.end(), s.edges.begin(), s.edges.end(), std::back_inserter(keep));
      common = std::move(keep);
    }
  }
  r.sv_intersection_empty = common.empty();
  if (!r.sv_intersection_empty) r.failures.push_back("edge sets of all S_v share " + std::to_string(common.size()) + " edges");
  return r;
}

BatageljResult batagelj_enumerate(int max_vertices) {
  if (max_vertices > kMaxVertices) throw SizeLimitError("batagelj_enumerate supports at most 64 vertices");
  BatageljResult result;
  std::map<CanonicalForm, EmbeddedGraph> seen;
  // Pending graphs grouped by order; within an order, by canonical form.
  std::map<int, std::map<CanonicalForm, EmbeddedGraph>> pending;
  EmbeddedGraph seed = cube_seed();
  if (max_vertices >= 8) pending[8].emplace(canonical_form(seed.graph()), seed);
  auto offer = [&](EmbeddedGraph child) {
    ++result.applications;
    const Graph& cg = child.graph();
    if (!is_cubic(cg) || !is_connected(cg) || !is_bipartite(cg) || !is_three_connected(cg)) {
      ++result.rejected;
      return;
    }
    CanonicalForm cf = canonical_form(cg);
    if (seen.count(cf) || pending[cg.order()].count(cf)) return;
    pending[cg.order()].emplace(std::move(cf), std::move(child));
  };
  while (!pending.empty()) {
    auto level = std::move(pending.begin()->second);
    pending.erase(pending.begin());
    for (auto& [cf, eg] : level) {
      const int n = eg.graph().order();
      if (n + 6 <= max_vertices)
        for (Vertex v = 0; v < n; ++v) offer(diamond_inflation(eg, v));
      if (n + 4 <= max_vertices)
        for (const auto& [d1, d2] : a1_sites(eg)) offer(a1_subdivision(eg, d1, d2));
      seen.emplace(cf, std::move(eg));
    }
  }
  std::vector<std::pair<std::pair<int, CanonicalForm>, EmbeddedGraph>> sorted;
  for (auto& [cf, eg] : seen) sorted.push_back({{eg.graph().order(), cf}, std::move(eg)});
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& p : sorted) result.graphs.push_back(std::move(p.second));
  return result;
}

std::optional<DecompositionReport> two_cut_decompose(const Graph& g) {
  if (!is_cubic(g)) throw GraphError("two-cut decomposition needs a cubic graph");
  if (!is_connected(g) || !is_bipartite(g)) throw GraphError("two-cut decomposition needs a connected bipartite graph");
  if (!planarity_test(g)) throw GraphError("two-cut decomposition needs a planar graph");
  if (vertex_connectivity(g) != 2) return std::nullopt;

  std::optional<DecompositionReport> first;
  int found = 0;
  for (const Edge& cut : two_cuts(g)) {
    const Bits rest = g.vertices() & ~bit(cut.u) & ~bit(cut.v);
    const auto sub = induced_subgraph(g, rest);
    for (Bits comp : components(sub.graph)) {
      Bits ymask = 0;
      for_each_bit(comp, [&](Vertex i) { ymask |= bit(sub.original[static_cast<std::size_t>(i)]); });
      const auto y = induced_subgraph(g, ymask);
      std::vector<Vertex> deficient;
      bool shape_ok = true;
      for (Vertex i = 0; i < y.graph.order(); ++i) {
        const int d = y.graph.degree(i);
        if (d == 2) deficient.push_back(i);
        else if (d != 3) shape_ok = false;
      }
      if (!shape_ok || deficient.size() != 2 || y.graph.adjacent(deficient[0], deficient[1])) continue;
      const Graph closed = add_edge(y.graph, Edge::make(deficient[0], deficient[1]));
      if (!is_bipartite(closed) || !is_three_connected(closed) || !planarity_test(closed)) continue;
      ++found;
      if (!first) {
        first = DecompositionReport{cut, ymask, y.original[static_cast<std::size_t>(deficient[0])],
                                    y.original[static_cast<std::size_t>(deficient[1])], closed, 0};
      }
    }
  }
  if (!first) throw GraphError("no 2-cut with a 3-connected closable component found");
  first->triples_found = found;
  return first;
}

Graph join_across_two_cut(const Graph& a, const Graph& b) {
  auto deficient = [](const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 2) out.push_back(v);
    if (out.size() != 2) throw GraphError("join needs exactly two degree-2 vertices in each piece");
    return out;
  };
  const auto da = deficient(a);
  const auto db = deficient(b);
  const int na = a.order();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + na, e.v + na});
  edges.push_back({da[0], db[0] + na});
  edges.push_back({da[1], db[1] + na});
  return Graph::from_edges(na + b.order(), edges);
}

}  // namespace balgraph
