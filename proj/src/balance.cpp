#include "balgraph/balance.hpp"

#include <algorithm>

namespace balgraph {

namespace {

// Chordless path extension anchored at the minimum vertex of each cycle.
// `emit(path, closing_vertex)` returns false to stop.
template <class Emit>
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int max_len, Emit& emit) : g_(g), max_len_(max_len), emit_(emit) {}

  bool run() {
    const int n = g_.order();
    for (Vertex s = 0; s < n; ++s) {
      allowed_ = g_.vertices() & ~low_bits(s + 1);
      const Bits ns = g_.neighbors(s) & allowed_;
      path_.assign(1, s);
      for (Vertex v1 : bits_to_vector(ns)) {
        closers_ = ns & ~low_bits(v1 + 1);
        // Neighbours of s other than the closers can never appear on the cycle.
        const Bits blocked = bit(s) | bit(v1) | (g_.neighbors(s) & ~closers_);
        path_.push_back(v1);
        if (!extend(v1, blocked)) return false;
        path_.pop_back();
      }
    }
    return true;
  }

 private:
  bool extend(Vertex last, Bits blocked) {
    const int len = static_cast<int>(path_.size());
    Bits cand = g_.neighbors(last) & allowed_ & ~blocked;
    while (cand) {
      const Vertex x = lowest(cand);
      cand &= cand - 1;
      if (closers_ & bit(x)) {
        if (len + 1 <= max_len_ && !emit_(path_, x)) return false;
      } else if (len + 2 <= max_len_) {
        path_.push_back(x);
        const bool go_on = extend(x, blocked | g_.neighbors(last) | bit(x));
        path_.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int max_len_;
  Emit& emit_;
  Bits allowed_ = 0;
  Bits closers_ = 0;
  std::vector<Vertex> path_;
};

template <class Emit>
bool search_cycles(const Graph& g, int max_len, Emit emit) {
  return CycleSearch<Emit>(g, max_len, emit).run();
}

InducedCycle make_cycle(const std::vector<Vertex>& path, Vertex closing) {
  InducedCycle c;
  c.vertices = path;
  c.vertices.push_back(closing);
  return c;
}

}  // namespace

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  if (k < 3) return false;
  Bits seen = 0;
  for (Vertex v : c) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Bits expected = bit(c[(i + 1) % k]) | bit(c[(i + k - 1) % k]);
    if ((g.neighbors(c[i]) & seen) != expected) return false;
  }
  return true;
}

bool for_each_induced_cycle(const Graph& g, std::optional<int> max_len,
                            const std::function<bool(const InducedCycle&)>& visit) {
  const int limit = max_len.value_or(g.order());
  return search_cycles(g, limit, [&](const std::vector<Vertex>& path, Vertex x) { return visit(make_cycle(path, x)); });
}

std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, std::optional<int> max_len) {
  std::vector<InducedCycle> out;
  for_each_induced_cycle(g, max_len, [&](const InducedCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

BalanceReport check_balance(const Graph& g, bool reduce_twins) {
  if (!is_connected(g)) throw GraphError("balance check requires a connected graph");
  BalanceReport report;
  auto bp = bipartition(g);
  if (auto* odd = std::get_if<OddClosedWalk>(&bp)) {
    report.balanced = false;
    report.reason = NotBipartite{std::move(*odd)};
    return report;
  }
  // A chordless cycle of length >= 5 meets each twin class at most once, so
  // one representative per class suffices for lengths 2 (mod 4).
  Bits keep = g.vertices();
  if (reduce_twins) {
    keep = 0;
    for (Bits c : twin_classes(g).classes) keep |= bit(lowest(c));
  }
  const InducedSubgraph sub = induced_subgraph(g, keep);
  std::optional<InducedCycle> bad;
  search_cycles(sub.graph, sub.graph.order(), [&](const std::vector<Vertex>& path, Vertex x) {
    if ((path.size() + 1) % 4 != 2) return true;
    bad = make_cycle(path, x);
    return false;
  });
  if (bad) {
    for (Vertex& v : bad->vertices) v = sub.original[static_cast<std::size_t>(v)];
    report.balanced = false;
    report.reason = BadCycle{std::move(*bad)};
  } else {
    report.balanced = true;
    report.reason = Balanced{};
  }
  return report;
}

}  // namespace

BalanceReport is_balanced(const Graph& g) { return check_balance(g, true); }

BalanceReport is_balanced_exhaustive(const Graph& g) { return check_balance(g, false); }

bool is_balanced_any(const Graph& g) {
  for (Bits comp : components(g))
    if (!is_balanced(induced_subgraph(g, comp).graph).balanced) return false;
  return true;
}

ZeroOneMatrix bipartite_adjacency_matrix(const Graph& g, const Bipartition& b) {
  if (static_cast<int>(b.side.size()) != g.order()) throw GraphError("bipartition size does not match graph");
  for (const Edge& e : g.edges())
    if (b.side[static_cast<std::size_t>(e.u)] == b.side[static_cast<std::size_t>(e.v)])
      throw GraphError("bipartition is not proper: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  const auto rows = bits_to_vector(b.side_mask(0));
  const auto cols = bits_to_vector(b.side_mask(1));
  ZeroOneMatrix a(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (g.adjacent(rows[i], cols[j])) a.set(static_cast<int>(i), static_cast<int>(j), true);
  return a;
}

Graph graph_of_matrix(const ZeroOneMatrix& a) {
  std::vector<Edge> edges;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a.at(r, c)) edges.push_back({r, a.rows() + c});
  return Graph::from_edges(a.rows() + a.cols(), edges);
}

bool matrix_is_balanced_oracle(const ZeroOneMatrix& a) {
  if (a.rows() > 8 || a.cols() > 8)
    throw SizeLimitError("matrix oracle supports at most 8x8, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  struct Sub {
    Bits rows;
    Bits cols;
  };
  std::vector<Sub> qualifying;
  const Bits all_rows = low_bits(a.rows());
  const Bits all_cols = low_bits(a.cols());
  for (Bits r = 1; r <= all_rows; ++r) {
    if (popcount(r) < 2) continue;
    for (Bits c = 1; c <= all_cols; ++c) {
      if (popcount(c) < 2) continue;
      bool ok = true;
      for_each_bit(r, [&](Vertex i) { ok = ok && popcount(a.row(i) & c) == 2; });
      if (!ok) continue;
      for_each_bit(c, [&](Vertex j) { ok = ok && popcount(a.column(j) & r) == 2; });
      if (ok) qualifying.push_back({r, c});
    }
  }
  for (const Sub& s : qualifying) {
    const bool minimal = std::none_of(qualifying.begin(), qualifying.end(), [&](const Sub& t) {
      return (t.rows & ~s.rows) == 0 && (t.cols & ~s.cols) == 0 && (t.rows != s.rows || t.cols != s.cols);
    });
    // Entry sum is two per row.
    if (minimal && (2 * popcount(s.rows)) % 4 != 0) return false;
  }
  return true;
}

}  // namespace balgraph
