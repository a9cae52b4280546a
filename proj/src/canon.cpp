#include "balgraph/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace balgraph {

namespace {

using Cells = std::vector<Bits>;
using Rows = std::vector<Bits>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

// Closed walks of length 4, 6 and 8 at each vertex, from A^2, A^3, A^4 rows.
std::vector<std::array<std::int64_t, 3>> walk_invariants(const Graph& g) {
  const int n = g.order();
  std::vector<std::array<std::int64_t, 3>> out(static_cast<std::size_t>(n));
  std::vector<std::int64_t> a2(static_cast<std::size_t>(n)), a3(static_cast<std::size_t>(n)), a4(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) a2[static_cast<std::size_t>(u)] = popcount(g.neighbors(v) & g.neighbors(u));
    for (Vertex u = 0; u < n; ++u) {
      std::int64_t s = 0;
      for_each_bit(g.neighbors(u), [&](Vertex w) { s += a2[static_cast<std::size_t>(w)]; });
      a3[static_cast<std::size_t>(u)] = s;
    }
    for (Vertex u = 0; u < n; ++u) {
      std::int64_t s = 0;
      for_each_bit(g.neighbors(u), [&](Vertex w) { s += a3[static_cast<std::size_t>(w)]; });
      a4[static_cast<std::size_t>(u)] = s;
    }
    std::array<std::int64_t, 3> inv{};
    for (Vertex u = 0; u < n; ++u) {
      const auto i = static_cast<std::size_t>(u);
      inv[0] += a2[i] * a2[i];
      inv[1] += a3[i] * a3[i];
      inv[2] += a4[i] * a4[i];
    }
    out[static_cast<std::size_t>(v)] = inv;
  }
  return out;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g) {}

  /// Refines `cells` to the coarsest equitable refinement reachable from the
  /// given splitters. Everything recorded in the returned trace depends only on
  /// cell positions and counts, so isomorphic inputs give equal traces.
  std::uint64_t refine(Cells& cells, Cells queue) const {
    const std::size_t n = static_cast<std::size_t>(g_.order());
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    std::array<Bits, kMaxVertices + 1> bucket{};
    for (std::size_t head = 0; head < queue.size() && cells.size() < n; ++head) {
      const Bits w = queue[head];
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Bits x = cells[ci];
        if (popcount(x) == 1) continue;
        Bits present = 0;  // bit c set when some member has c neighbours in w
        Bits high_present = 0;
        for_each_bit(x, [&](Vertex v) {
          const int c = popcount(g_.neighbors(v) & w);
          if (c < 64) {
            if (!((present >> c) & 1U)) bucket[static_cast<std::size_t>(c)] = 0;
            present |= bit(c);
          } else {
            if (!high_present) bucket[64] = 0;
            high_present = 1;
          }
          bucket[static_cast<std::size_t>(c)] |= bit(v);
        });
        if (popcount(present) + (high_present ? 1 : 0) == 1) continue;
        Cells parts;
        for_each_bit(present, [&](Vertex c) {
          parts.push_back(bucket[static_cast<std::size_t>(c)]);
          h = mix(h, (static_cast<std::uint64_t>(ci) << 16) | (static_cast<std::uint64_t>(c) << 8) |
                         static_cast<std::uint64_t>(popcount(bucket[static_cast<std::size_t>(c)])));
        });
        if (high_present) {
          parts.push_back(bucket[64]);
          h = mix(h, (static_cast<std::uint64_t>(ci) << 16) | (64ULL << 8) |
                         static_cast<std::uint64_t>(popcount(bucket[64])));
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), parts.begin(), parts.end());
        queue.insert(queue.end(), parts.begin(), parts.end());
        ci += parts.size() - 1;
      }
      h = mix(h, cells.size());
    }
    return h;
  }

  /// Refined root partition: vertices grouped by degree and walk counts, in
  /// increasing invariant order.
  Cells initial(std::uint64_t& trace) const {
    const int n = g_.order();
    const auto inv = walk_invariants(g_);
    std::vector<std::pair<std::array<std::int64_t, 4>, Vertex>> keyed;
    for (Vertex v = 0; v < n; ++v) {
      const auto& w = inv[static_cast<std::size_t>(v)];
      keyed.push_back({{g_.degree(v), w[0], w[1], w[2]}, v});
    }
    std::sort(keyed.begin(), keyed.end());
    Cells cells;
    std::uint64_t h = 0x13198a2e03707344ULL;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) {
        cells.push_back(0);
        for (std::int64_t x : keyed[i].first) h = mix(h, static_cast<std::uint64_t>(x));
      }
      cells.back() |= bit(keyed[i].second);
    }
    h = mix(h, cells.size());
    trace = mix(h, refine(cells, cells));
    return cells;
  }

  static std::size_t target_cell(const Cells& cells) {
    std::size_t best = cells.size();
    int best_size = kMaxVertices + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int s = popcount(cells[i]);
      if (s > 1 && s < best_size) {
        best = i;
        best_size = s;
      }
    }
    return best;
  }

  static Cells individualize(const Cells& cells, std::size_t ci, Vertex v) {
    Cells out;
    out.reserve(cells.size() + 1);
    out.insert(out.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(ci));
    out.push_back(bit(v));
    out.push_back(cells[ci] & ~bit(v));
    out.insert(out.end(), cells.begin() + static_cast<std::ptrdiff_t>(ci) + 1, cells.end());
    return out;
  }

  Permutation labeling(const Cells& discrete) const {
    Permutation lab(static_cast<std::size_t>(g_.order()));
    for (std::size_t i = 0; i < discrete.size(); ++i) lab[static_cast<std::size_t>(lowest(discrete[i]))] = static_cast<Vertex>(i);
    return lab;
  }

  Rows relabeled_rows(const Permutation& lab) const {
    Rows rows(lab.size(), 0);
    for (std::size_t u = 0; u < lab.size(); ++u) {
      Bits r = 0;
      for_each_bit(g_.neighbors(static_cast<Vertex>(u)), [&](Vertex v) { r |= bit(lab[static_cast<std::size_t>(v)]); });
      rows[static_cast<std::size_t>(lab[u])] = r;
    }
    return rows;
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
};

// Maps each vertex of leaf `a` to the vertex of leaf `b` carrying the same label.
Permutation leaf_map(const Permutation& lab_a, const Permutation& lab_b) {
  Permutation inv_b(lab_b.size());
  for (std::size_t v = 0; v < lab_b.size(); ++v) inv_b[static_cast<std::size_t>(lab_b[v])] = static_cast<Vertex>(v);
  Permutation p(lab_a.size());
  for (std::size_t v = 0; v < lab_a.size(); ++v) p[v] = inv_b[static_cast<std::size_t>(lab_a[v])];
  return p;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

bool fixes_all(const Permutation& p, const std::vector<Vertex>& points) {
  return std::all_of(points.begin(), points.end(), [&](Vertex v) { return p[static_cast<std::size_t>(v)] == v; });
}

// Orbit representatives under the automorphisms that fix `path` pointwise.
UnionFind stabilizer_orbits(int n, const std::vector<Permutation>& autos, const std::vector<Vertex>& path) {
  UnionFind uf(n);
  for (const auto& p : autos)
    if (fixes_all(p, path))
      for (int v = 0; v < n; ++v) uf.unite(v, p[static_cast<std::size_t>(v)]);
  return uf;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : ref_(g), n_(g.order()) {}

  void run() {
    if (n_ == 0) {
      best_lab_.clear();
      have_best_ = true;
      return;
    }
    std::uint64_t h = 0;
    Cells cells = ref_.initial(h);
    trace_.push_back(h);
    visit(cells);
  }

  Permutation best_label() const { return best_lab_; }
  const Rows& best_rows() const { return best_rows_; }
  std::vector<Permutation>& automorphisms() { return autos_; }

 private:
  // -1, 0, +1 comparing the current trace prefix with the best leaf's trace.
  int compare_trace_prefix() const {
    const std::size_t k = std::min(trace_.size(), best_trace_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (trace_[i] < best_trace_[i]) return -1;
      if (trace_[i] > best_trace_[i]) return 1;
    }
    return 0;
  }

  void leaf(const Cells& cells) {
    Permutation lab = ref_.labeling(cells);
    Rows rows = ref_.relabeled_rows(lab);
    bool matched_first = false;
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = trace_;
      first_rows_ = rows;
      first_lab_ = lab;
    } else if (trace_ == first_trace_ && rows == first_rows_) {
      autos_.push_back(leaf_map(first_lab_, lab));
      matched_first = true;
    }
    if (have_best_) {
      // Leaves are ordered by (trace, relabeled rows); keep the largest.
      if (trace_ < best_trace_) return;
      if (trace_ == best_trace_) {
        if (rows < best_rows_) return;
        if (rows == best_rows_) {
          if (!(matched_first && best_lab_ == first_lab_) && lab != best_lab_)
            autos_.push_back(leaf_map(best_lab_, lab));
          return;
        }
      }
    }
    have_best_ = true;
    best_trace_ = trace_;
    best_rows_ = std::move(rows);
    best_lab_ = std::move(lab);
  }

  void visit(const Cells& cells) {
    if (have_best_ && compare_trace_prefix() < 0) return;
    const std::size_t ci = Refiner::target_cell(cells);
    if (ci == cells.size()) {
      leaf(cells);
      return;
    }
    // Only children with the largest trace can hold the largest leaf.
    struct Child {
      std::uint64_t trace;
      Vertex v;
      Cells cells;
    };
    std::vector<Child> kids;
    std::uint64_t top = 0;
    for_each_bit(cells[ci], [&](Vertex w) {
      Cells child = Refiner::individualize(cells, ci, w);
      const std::uint64_t t = ref_.refine(child, Cells{bit(w)});
      if (kids.empty() || t > top) {
        kids.clear();
        top = t;
      }
      if (t == top) kids.push_back({t, w, std::move(child)});
    });
    Bits explored_reps = 0;
    for (Child& k : kids) {
      if (!autos_.empty()) {
        UnionFind uf = stabilizer_orbits(n_, autos_, path_);
        const int rep = uf.find(k.v);
        bool seen = false;
        for_each_bit(explored_reps, [&](Vertex e) { seen = seen || uf.find(e) == rep; });
        if (seen) continue;
      }
      explored_reps |= bit(k.v);
      trace_.push_back(k.trace);
      path_.push_back(k.v);
      visit(k.cells);
      path_.pop_back();
      trace_.pop_back();
    }
  }

  Refiner ref_;
  int n_;
  std::vector<std::uint64_t> trace_;
  std::vector<Vertex> path_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_trace_;
  Rows best_rows_;
  Permutation best_lab_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_trace_;
  Rows first_rows_;
  Permutation first_lab_;
  std::vector<Permutation> autos_;
};

void check_size(const Graph& g) {
  if (g.order() > kMaxVertices) throw SizeLimitError("canonical labeling supports at most 64 vertices");
}

// Serializes rows as an n-by-n bit matrix, row-major, most significant bit first.
std::string pack_rows(const Rows& rows) {
  const std::size_t n = rows.size();
  std::string out;
  out.push_back(static_cast<char>(n));
  unsigned acc = 0;
  int nbits = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      acc = (acc << 1) | static_cast<unsigned>((rows[i] >> j) & 1U);
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  check_size(g);
  CanonSearch search(g);
  search.run();
  CanonicalLabeling out;
  out.label = search.best_label();
  out.form.bytes = pack_rows(search.best_rows());
  out.automorphisms = std::move(search.automorphisms());
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    check_size(a);
    check_size(b);
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.order()) return false;
  Bits image = 0;
  for (Vertex v : p) {
    if (v < 0 || v >= g.order()) return false;
    image |= bit(v);
  }
  if (image != g.vertices()) return false;
  return g.permuted(p) == g;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : ref_(g), n_(g.order()) {}

  std::vector<Permutation> run() {
    if (n_ <= 1) return {};
    // First path: always individualize the lowest vertex of the target cell.
    std::uint64_t h = 0;
    Cells cells = ref_.initial(h);
    first_trace_.push_back(h);
    for (;;) {
      const std::size_t ci = Refiner::target_cell(cells);
      if (ci == cells.size()) break;
      const Vertex v = lowest(cells[ci]);
      levels_.push_back({cells, ci, v});
      cells = Refiner::individualize(cells, ci, v);
      first_trace_.push_back(ref_.refine(cells, Cells{bit(v)}));
    }
    first_lab_ = ref_.labeling(cells);
    first_rows_ = ref_.relabeled_rows(first_lab_);

    std::vector<Vertex> prefix;
    for (const auto& lv : levels_) prefix.push_back(lv.chosen);
    for (std::size_t level = levels_.size(); level-- > 0;) {
      const Level& lv = levels_[level];
      const std::vector<Vertex> fixed(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(level));
      for_each_bit(lv.cells[lv.cell], [&](Vertex w) {
        if (w == lv.chosen) return;
        UnionFind uf = stabilizer_orbits(n_, gens_, fixed);
        if (uf.find(w) == uf.find(lv.chosen)) return;
        Cells child = Refiner::individualize(lv.cells, lv.cell, w);
        if (ref_.refine(child, Cells{bit(w)}) != first_trace_[level + 1]) return;
        if (auto p = match(child, level + 1)) gens_.push_back(std::move(*p));
      });
    }
    return gens_;
  }

 private:
  struct Level {
    Cells cells;
    std::size_t cell;
    Vertex chosen;
  };

  // Depth-first search below `cells` (already refined, at `depth`) for a leaf equivalent to the first leaf.
  std::optional<Permutation> match(const Cells& cells, std::size_t depth) {
    const std::size_t ci = Refiner::target_cell(cells);
    if (ci == cells.size()) {
      if (depth != first_trace_.size() - 1) return std::nullopt;
      Permutation lab = ref_.labeling(cells);
      if (ref_.relabeled_rows(lab) != first_rows_) return std::nullopt;
      return leaf_map(first_lab_, lab);
    }
    if (depth + 1 >= first_trace_.size()) return std::nullopt;
    std::optional<Permutation> found;
    Bits members = cells[ci];
    while (members && !found) {
      const Vertex w = lowest(members);
      members &= members - 1;
      Cells child = Refiner::individualize(cells, ci, w);
      if (ref_.refine(child, Cells{bit(w)}) != first_trace_[depth + 1]) continue;
      found = match(child, depth + 1);
    }
    return found;
  }

  Refiner ref_;
  int n_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> first_trace_;
  Permutation first_lab_;
  Rows first_rows_;
  std::vector<Permutation> gens_;
};

}  // namespace

std::vector<Permutation> automorphism_generators(const Graph& g) {
  check_size(g);
  return AutomorphismSearch(g).run();
}

std::vector<Bits> orbits(int n, const std::vector<Permutation>& generators) {
  UnionFind uf(n);
  for (const auto& p : generators)
    for (int v = 0; v < n; ++v) uf.unite(v, p[static_cast<std::size_t>(v)]);
  std::vector<Bits> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.push_back(0);
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])] |= bit(v);
  }
  return out;
}

bool is_vertex_transitive(const Graph& g) {
  if (g.order() <= 1) return true;
  return orbits(g.order(), automorphism_generators(g)).size() == 1;
}

}  // namespace balgraph
