#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

/// k pairwise edge-disjoint forests. When certifying tau >= k each forest is a spanning tree.
struct TreePacking {
  int k = 0;
  std::vector<std::vector<Edge>> forests;
};

/// A partition (V_1..V_t) with deficiency = 2k(t-1) - sum d(V_i).
/// Positive deficiency certifies tau < k.
struct PartitionCertificate {
  Partition partition;
  std::int64_t deficiency = 0;
};

struct EdgeCut {
  std::size_t value = 0;
  /// Vertex side X with d(X) = value.
  VertexSet witness;
};

struct TauDecision {
  bool answer = false;
  std::variant<TreePacking, PartitionCertificate> evidence;
};

struct NashWilliamsResult {
  bool holds = false;
  /// Lexicographically first partition (restricted-growth order) of maximum deficiency.
  PartitionCertificate worst;
};

struct CatlinLaiShaoResult {
  bool equiv_holds = false;
  bool kappa_side = false;     ///< kappa'(G) >= 2k
  bool deletion_side = false;  ///< tau(G - X) >= k for every |X| <= k
  /// Edge set contradicting the equivalence; none on every correct run.
  std::optional<std::vector<Edge>> counterexample;
};

inline constexpr int kBruteForceCutMaxOrder = 16;
inline constexpr int kPartitionOracleMaxOrder = 12;
inline constexpr int kCatlinLaiShaoMaxOrder = 8;
inline constexpr std::size_t kCatlinLaiShaoMaxSize = 16;
inline constexpr int kCatlinLaiShaoMaxK = 2;

/// Global minimum cut by Stoer-Wagner; maximum-adjacency ties go to the lowest vertex index.
/// Disconnected graphs give (0, component of vertex 0). Throws DomainError for n < 2.
EdgeCut edge_connectivity(const Graph& g);

/// min d(X) over all 2^(n-1) - 1 cuts. Throws GuardRefusal for n > 16, DomainError for n < 2.
std::size_t brute_force_edge_connectivity(const Graph& g);

struct TauOptions {
  /// Replace negative certificates by the partition oracle's worst partition when n <= 12.
  bool canonicalize = true;
};

/// Decides tau(G) >= k by graphic-matroid union with shortest exchange paths.
/// Positive answers carry k spanning trees, negative answers a deficient partition.
TauDecision tau_at_least(const Graph& g, int k, TauOptions options = {});

/// Maximum number of edge-disjoint spanning trees. 0 for disconnected graphs and for n <= 1.
int tau(const Graph& g);

/// Exhaustive Nash-Williams/Tutte check over all set partitions. Throws GuardRefusal for n > 12.
NashWilliamsResult nash_williams_oracle(const Graph& g, int k);

/// kappa'(G) >= 2k  <=>  tau(G - X) >= k for all X subset E, |X| <= k, checked exhaustively.
/// Throws GuardRefusal beyond n <= 8, m <= 16, k <= 2.
CatlinLaiShaoResult check_catlin_lai_shao(const Graph& g, int k);

/// Structural checks used to re-verify evidence independently of how it was produced.
bool verify_tree_packing(const Graph& g, const TreePacking& packing, bool require_spanning);
bool verify_certificate(const Graph& g, const PartitionCertificate& cert, int k);

}  // namespace spectre
