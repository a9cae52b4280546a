#include "balgraph/exact_cover.hpp"

#include <variant>

#include "balgraph/balance.hpp"

namespace balgraph {

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const ZeroOneMatrix& a) {
    supports_.reserve(static_cast<std::size_t>(a.cols()));
    for (int c = 0; c < a.cols(); ++c) supports_.push_back(a.column(c));
  }

  bool solve(Bits uncovered) {
    if (!uncovered) return true;
    // Row with fewest columns that fit entirely inside the uncovered rows.
    int best_row = -1;
    int best_count = static_cast<int>(supports_.size()) + 1;
    for_each_bit(uncovered, [&](Vertex r) {
      if (best_count == 0) return;
      int count = 0;
      for (Bits s : supports_)
        if ((s & bit(r)) && (s & ~uncovered) == 0) ++count;
      if (count < best_count) {
        best_count = count;
        best_row = r;
      }
    });
    if (best_count == 0) return false;
    for (std::size_t c = 0; c < supports_.size(); ++c) {
      const Bits s = supports_[c];
      if (!(s & bit(best_row)) || (s & ~uncovered)) continue;
      chosen_.push_back(static_cast<int>(c));
      if (solve(uncovered & ~s)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<int> chosen_;

 private:
  std::vector<Bits> supports_;
};

}  // namespace

std::optional<ExactCoverSolution> exact_cover(const ZeroOneMatrix& a) {
  CoverSearch search(a);
  if (!search.solve(low_bits(a.rows()))) return std::nullopt;
  return ExactCoverSolution{std::move(search.chosen_)};
}

bool is_exact_cover(const ZeroOneMatrix& a, const std::vector<int>& columns) {
  Bits covered = 0;
  for (int c : columns) {
    if (c < 0 || c >= a.cols()) return false;
    const Bits s = a.column(c);
    if (covered & s) return false;
    covered |= s;
  }
  return covered == low_bits(a.rows());
}

DivisibilityReport verify_divisibility(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) throw GraphError("divisibility check requires a regular graph");
  auto bp = bipartition(g);
  const auto* sides = std::get_if<Bipartition>(&bp);
  if (!sides) throw GraphError("divisibility check requires a bipartite graph");

  DivisibilityReport report;
  report.degree = *k;
  report.vertices = g.order();
  report.balanced = is_balanced(g).balanced;
  const ZeroOneMatrix a = bipartite_adjacency_matrix(g, *sides);
  report.cover = exact_cover(a);
  report.cover_size = report.cover ? report.cover->size() : 0;
  if (report.balanced) {
    report.holds = report.cover.has_value() && is_exact_cover(a, report.cover->columns) &&
                   report.cover_size * report.degree * 2 == report.vertices;
  }
  return report;
}

}  // namespace balgraph
