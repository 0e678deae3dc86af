#include <string>

#include "spectre/connectivity.hpp"
#include "spectre/errors.hpp"

namespace spectre {

namespace {

// Depth-first walk over restricted-growth strings a[0..n-1] with a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]), visited in lexicographic order. The crossing-edge
// count is maintained incrementally from the edges to earlier vertices.
class PartitionWalk {
 public:
  PartitionWalk(const Graph& g, int k) : g_(g), k_(k), label_(static_cast<std::size_t>(g.order()), 0) {}

  void run() {
    label_[0] = 0;
    visit(1, 1, 0);
  }

  std::int64_t best_deficiency() const { return best_; }
  const std::vector<int>& best_labels() const { return best_labels_; }

 private:
  void visit(int v, int blocks, std::int64_t crossing) {
    if (v == g_.order()) {
      const std::int64_t deficiency = 2 * static_cast<std::int64_t>(k_) * (blocks - 1) - 2 * crossing;
      if (best_labels_.empty() || deficiency > best_) {
        best_ = deficiency;
        best_labels_ = label_;
      }
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label_[v] = b;
      std::int64_t added = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (w < v && label_[w] != b) ++added;
      }
      visit(v + 1, b == blocks ? blocks + 1 : blocks, crossing + added);
    }
  }

  const Graph& g_;
  int k_;
  std::vector<int> label_;
  std::vector<int> best_labels_;
  std::int64_t best_ = 0;
};

}  // namespace

NashWilliamsResult nash_williams_oracle(const Graph& g, int k) {
  if (k <= 0) throw DomainError("nash_williams_oracle needs k >= 1");
  const int n = g.order();
  if (n == 0) throw DomainError("nash_williams_oracle needs a non-empty graph");
  if (n > kPartitionOracleMaxOrder) {
    throw GuardRefusal("partition oracle refused for n = " + std::to_string(n) + " > " +
                       std::to_string(kPartitionOracleMaxOrder));
  }
  PartitionWalk walk(g, k);
  walk.run();
  NashWilliamsResult out;
  out.worst = {Partition::from_labels(walk.best_labels()), walk.best_deficiency()};
  out.holds = walk.best_deficiency() <= 0;
  return out;
}

CatlinLaiShaoResult check_catlin_lai_shao(const Graph& g, int k) {
  if (k <= 0) throw DomainError("check_catlin_lai_shao needs k >= 1");
  if (g.order() < 2 || g.order() > kCatlinLaiShaoMaxOrder || g.size() > kCatlinLaiShaoMaxSize ||
      k > kCatlinLaiShaoMaxK) {
    throw GuardRefusal("Catlin-Lai-Shao check refused: needs 2 <= n <= 8, m <= 16, k <= 2 (n = " +
                       std::to_string(g.order()) + ", m = " + std::to_string(g.size()) +
                       ", k = " + std::to_string(k) + ")");
  }
  CatlinLaiShaoResult out;
  const EdgeCut cut = edge_connectivity(g);
  out.kappa_side = cut.value >= static_cast<std::size_t>(2 * k);

  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Edge> removed;
  std::optional<std::vector<Edge>> failing;
  auto try_removal = [&] {
    if (!tau_at_least(delete_edges(g, removed), k, {.canonicalize = false}).answer) failing = removed;
  };
  try_removal();
  for (std::size_t i = 0; i < m && !failing; ++i) {
    removed = {edges[i]};
    try_removal();
    for (std::size_t j = i + 1; k >= 2 && j < m && !failing; ++j) {
      removed = {edges[i], edges[j]};
      try_removal();
    }
  }
  out.deletion_side = !failing.has_value();
  out.equiv_holds = out.kappa_side == out.deletion_side;
  if (!out.equiv_holds) {
    if (out.kappa_side) {
      out.counterexample = *failing;
    } else {
      // All small deletions survive although a cut of size < 2k exists: report that cut.
      std::vector<Edge> cut_edges;
      for (const Edge& e : edges) {
        if (cut.witness.contains(e.u) != cut.witness.contains(e.v)) cut_edges.push_back(e);
      }
      out.counterexample = std::move(cut_edges);
    }
  }
  return out;
}

}  // namespace spectre
