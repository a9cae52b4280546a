#include "balgraph/census.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "balgraph/balance.hpp"
#include "balgraph/cayley.hpp"
#include "balgraph/graph6.hpp"

namespace balgraph {

void CensusTask::validate() const {
  if (vertices % 2 != 0) throw GraphError("census: vertex count " + std::to_string(vertices) + " is odd");
  if (vertices < 4 || vertices > 36) throw GraphError("census: vertex count " + std::to_string(vertices) + " outside 4..36");
  if (degree < 1 || degree > vertices / 2) throw GraphError("census: degree " + std::to_string(degree) + " out of range");
  if (mod < 1) throw GraphError("census: mod must be >= 1, got " + std::to_string(mod));
  if (res < 0 || res >= mod) throw GraphError("census: residue " + std::to_string(res) + " not in 0.." + std::to_string(mod - 1));
  if (jobs < 1) throw GraphError("census: jobs must be >= 1, got " + std::to_string(jobs));
}

Graph graph_of_rows(const std::vector<Bits>& rows, int m) {
  std::vector<Bits> adj(static_cast<std::size_t>(2 * m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (rows[static_cast<std::size_t>(i)] >> (m - 1 - j) & 1U) {
        adj[static_cast<std::size_t>(i)] |= bit(m + j);
        adj[static_cast<std::size_t>(m + j)] |= bit(i);
      }
  return Graph::from_rows(std::move(adj));
}

namespace {

// Depth (rows placed) at which subtrees are numbered for work partitioning.
constexpr int kSplitDepth = 3;

class MatrixGenerator {
 public:
  MatrixGenerator(int m, int k, bool connected, int mod, int res, std::function<void(const std::vector<Bits>&)> visit)
      : m_(m), k_(k), connected_(connected), mod_(mod), res_(res), visit_(std::move(visit)),
        rows_(static_cast<std::size_t>(m)), colsum_(static_cast<std::size_t>(m), 0) {
    // k-subsets of the m columns, numerically descending (lexicographically largest first).
    for (Bits r = low_bits(m); ; --r) {
      if (popcount(r) == k) candidates_.push_back(r);
      if (r == 0) break;
    }
  }

  long long run() {
    std::vector<Bits> groups{low_bits(m_)};
    extend(0, groups, 0);
    return visited_;
  }

 private:
  static bool prefix_in_group(Bits r, Bits group) {
    const Bits ones = r & group;
    const Bits zeros = group & ~r;
    if (!ones || !zeros) return true;
    return std::countr_zero(ones) > 63 - std::countl_zero(zeros);
  }

  void extend(int i, const std::vector<Bits>& groups, std::size_t start) {
    if (i == std::min(kSplitDepth, m_) && mod_ > 1) {
      const long long node = split_counter_++;
      if (node % mod_ != res_) return;
    }
    if (i == m_) {
      leaf();
      return;
    }
    const int remaining = m_ - 1 - i;
    Bits full = 0;
    Bits forced = 0;
    for (int j = 0; j < m_; ++j) {
      const int c = colsum_[static_cast<std::size_t>(j)];
      const Bits b = bit(m_ - 1 - j);
      if (c == k_) full |= b;
      else if (k_ - c > remaining) forced |= b;
    }
    if (popcount(forced) > k_) return;
    for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
      const Bits r = candidates_[idx];
      if ((r & full) || (r & forced) != forced) continue;
      bool ok = true;
      for (Bits g : groups)
        if (!prefix_in_group(r, g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<Bits> next;
      next.reserve(groups.size() + static_cast<std::size_t>(k_));
      for (Bits g : groups) {
        if (g & r) next.push_back(g & r);
        if (g & ~r) next.push_back(g & ~r);
      }
      rows_[static_cast<std::size_t>(i)] = r;
      for_each_bit(r, [&](Vertex b) { ++colsum_[static_cast<std::size_t>(m_ - 1 - b)]; });
      extend(i + 1, next, idx);
      for_each_bit(r, [&](Vertex b) { --colsum_[static_cast<std::size_t>(m_ - 1 - b)]; });
    }
  }

  void leaf() {
    // Transpose is doubly lexical too; keep only the smaller of the pair.
    std::vector<Bits> cols(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        if (rows_[static_cast<std::size_t>(i)] >> (m_ - 1 - j) & 1U) cols[static_cast<std::size_t>(j)] |= bit(m_ - 1 - i);
    if (std::lexicographical_compare(cols.begin(), cols.end(), rows_.begin(), rows_.end(), std::greater<>())) return;
    if (connected_ && !connected()) return;
    ++visited_;
    visit_(rows_);
  }

  bool connected() const {
    // Alternate row and column reachability.
    Bits row_seen = 1;
    Bits col_seen = 0;
    Bits frontier = 1;
    while (frontier) {
      Bits cols = 0;
      for_each_bit(frontier, [&](Vertex i) { cols |= rows_[static_cast<std::size_t>(i)]; });
      cols &= ~col_seen;
      col_seen |= cols;
      Bits rows = 0;
      for (int i = 0; i < m_; ++i)
        if (!(row_seen & bit(i)) && (rows_[static_cast<std::size_t>(i)] & cols)) rows |= bit(i);
      row_seen |= rows;
      frontier = rows;
    }
    return row_seen == low_bits(m_);
  }

  int m_;
  int k_;
  bool connected_;
  int mod_;
  int res_;
  std::function<void(const std::vector<Bits>&)> visit_;
  std::vector<Bits> candidates_;
  std::vector<Bits> rows_;
  std::vector<int> colsum_;
  long long split_counter_ = 0;
  long long visited_ = 0;
};

}  // namespace

long long for_each_census_matrix(const CensusTask& task, const std::function<void(const std::vector<Bits>&)>& visit) {
  task.validate();
  MatrixGenerator gen(task.vertices / 2, task.degree, task.connected_only, task.mod, task.res, visit);
  return gen.run();
}

std::vector<CensusGraph> CensusReport::balanced_graphs() const {
  std::vector<CensusGraph> out;
  std::copy_if(graphs.begin(), graphs.end(), std::back_inserter(out), [](const CensusGraph& g) { return g.balanced; });
  return out;
}

CensusReport run_census(const CensusTask& task) {
  task.validate();
  const int m = task.vertices / 2;
  struct Partial {
    std::map<CanonicalForm, Graph> classes;
    long long generated = 0;
  };
  std::vector<Partial> parts(static_cast<std::size_t>(task.jobs));
  auto work = [&](int w) {
    CensusTask sub = task;
    // Worker w takes the nodes of residue `res` whose quotient is w (mod jobs).
    sub.mod = task.mod * task.jobs;
    sub.res = task.res + task.mod * w;
    sub.jobs = 1;
    Partial& p = parts[static_cast<std::size_t>(w)];
    p.generated = for_each_census_matrix(sub, [&](const std::vector<Bits>& rows) {
      Graph g = graph_of_rows(rows, m);
      CanonicalForm cf = canonical_form(g);
      p.classes.try_emplace(std::move(cf), std::move(g));
    });
  };
  if (task.jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < task.jobs; ++w) threads.emplace_back(work, w);
  }
  std::map<CanonicalForm, Graph> merged;
  CensusReport report;
  report.d = task.vertices;
  for (Partial& p : parts) {
    report.generated += p.generated;
    merged.merge(p.classes);
  }
  for (auto& [cf, g] : merged) {
    CensusGraph cg{std::move(g), cf, false};
    cg.balanced = is_connected(cg.graph) ? is_balanced(cg.graph).balanced : is_balanced_any(cg.graph);
    report.balanced += cg.balanced ? 1 : 0;
    report.graphs.push_back(std::move(cg));
  }
  report.total = static_cast<long long>(report.graphs.size());
  return report;
}

std::vector<Graph> enumerate_cubic_bipartite(int d, int mod, int res) {
  CensusTask task;
  task.vertices = d;
  task.mod = mod;
  task.res = res;
  if (d < 6) throw GraphError("census: cubic bipartite graphs need at least 6 vertices, got " + std::to_string(d));
  std::vector<Graph> out;
  for (CensusGraph& g : run_census(task).graphs) out.push_back(std::move(g.graph));
  return out;
}

CensusReport count_balanced_cubic(int d, int jobs) {
  CensusTask task;
  task.vertices = d;
  task.jobs = jobs;
  if (d < 6) throw GraphError("census: cubic bipartite graphs need at least 6 vertices, got " + std::to_string(d));
  return run_census(task);
}

ConjectureReport check_conjecture_twins(const CensusReport& census) {
  ConjectureReport r;
  r.d = census.d;
  for (const CensusGraph& g : census.graphs) {
    if (!g.balanced) continue;
    ++r.checked;
    if (twin_classes(g.graph).has_nontrivial_twins()) ++r.with_twins;
    else r.violations.push_back({to_graph6(g.graph), "balanced graph without non-trivial twins"});
  }
  return r;
}

ConjectureReport check_conjecture_twins(int d) { return check_conjecture_twins(count_balanced_cubic(d)); }

ConjectureReport check_conjecture_consequences(const CensusReport& census) {
  ConjectureReport r;
  r.d = census.d;
  const Graph k33 = complete_bipartite(3, 3);
  for (const CensusGraph& g : census.graphs) {
    if (!g.balanced) continue;
    ++r.checked;
    if (twin_classes(g.graph).has_nontrivial_twins()) ++r.with_twins;
    const auto gi = girth(g.graph);
    if (gi != 4) r.violations.push_back({to_graph6(g.graph), "girth " + (gi ? std::to_string(*gi) : std::string("inf")) + ", expected 4"});
    if (is_vertex_transitive(g.graph)) {
      ++r.vertex_transitive;
      if (!is_isomorphic(g.graph, k33))
        r.violations.push_back({to_graph6(g.graph), "vertex-transitive balanced graph other than K_{3,3}"});
      if (!recognize_lt_cycle(g.graph))
        r.violations.push_back({to_graph6(g.graph), "vertex-transitive balanced graph not an (l,t)-cycle"});
    }
  }
  return r;
}

ConjectureReport check_conjecture_consequences(int d) { return check_conjecture_consequences(count_balanced_cubic(d)); }

}  // namespace balgraph
