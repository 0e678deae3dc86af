#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectre/connectivity.hpp"
#include "spectre/graph.hpp"
#include "spectre/spectral.hpp"

namespace spectre {

enum class TheoremId {
  Main1I,
  Main1II,
  Main2,
  Cor2I,
  Cor2II,
  Cor2III,
  Co32I,
  Co32II,
  Co33I,
  Co33II,
  Co33III,
  Co35,
  Th43I,
  Th43II,
  Lemma31,
  Lemma41,
};

/// Upper-case identifiers: "MAIN1_I", "COR2_II", "CO3_2_I", "TH4_3_II", "LEMMA3_1", ...
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
const std::vector<TheoremId>& all_theorems();

/// What the conclusion asserts.
enum class Target { KappaStrong, KappaWeak, Tau };
std::string_view to_string(Target target);

struct ExactValues {
  std::optional<std::size_t> edge_connectivity;
  std::optional<int> tau;
  std::optional<bool> tau_at_least_k;
};

/// Outcome of one theorem check on one graph.
struct Verdict {
  TheoremId theorem = TheoremId::Main1I;
  std::optional<Target> target;
  int k = 0;
  double a = 0.0;
  double b = 1.0;

  bool applicable = false;
  std::string reason;  ///< why not applicable; empty otherwise

  std::string eigenvalue_label;  ///< e.g. "lambda_2(G,a)", "mu_{n-1}(G)"
  std::optional<double> eigenvalue;
  std::string relation;  ///< "<", "<=", ">", ">=" as required of eigenvalue against threshold
  std::optional<double> threshold;
  bool hypothesis_holds = false;
  /// Positive exactly when the hypothesis holds with room to spare.
  std::optional<double> margin;

  std::string conclusion_claim;
  /// nullopt when exact verification was skipped.
  std::optional<bool> conclusion_verified;
  ExactValues exact;

  /// False only for applicable, satisfied hypotheses whose conclusion failed.
  bool sound() const { return !(applicable && hypothesis_holds && conclusion_verified == false); }
};

/// Per-graph cache of derived quantities shared by the checkers. Not thread-safe;
/// use one instance per thread.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  const DegreeStats& degrees();
  Girth girth();
  bool bipartite();
  bool connected();
  /// Spectrum of aD + bA, cached per (a, b).
  const Spectrum& spectrum(const MatrixKind& kind);
  std::size_t edge_connectivity();
  bool tau_at_least(int k);
  int tau();

 private:
  Graph graph_;
  std::optional<DegreeStats> degrees_;
  std::optional<Girth> girth_;
  std::optional<bool> bipartite_;
  std::optional<bool> connected_;
  std::map<std::pair<double, double>, Spectrum> spectra_;
  std::optional<std::size_t> kappa_;
  std::optional<int> tau_;
  std::map<int, bool> tau_at_least_;
};

struct CheckOptions {
  /// Verify conclusions exactly. Unset: verify when n <= 200.
  std::optional<bool> exact;
};

inline constexpr int kDefaultExactMaxOrder = 200;

enum class Main1Variant { Strong, Weak };
enum class CorVariant { I, II, III };

/// kappa'(G) >= k from lambda_2(G,a) <= strong threshold (Strong) or < weak threshold (Weak).
/// The strong form is reported inapplicable when n < 2 n1*.
Verdict check_main1(GraphAnalysis& ctx, int k, double a, Main1Variant variant, CheckOptions opt = {});

/// tau(G) >= k from lambda_2(G,a) < (a+1) delta - (2k-1)/n1*.
Verdict check_main2(GraphAnalysis& ctx, int k, double a, CheckOptions opt = {});

/// tau forms with lambda_2 (I, a = 0), mu_{n-1} (II, a = -1), q_2 (III, a = 1).
Verdict check_cor2(GraphAnalysis& ctx, int k, CorVariant variant, CheckOptions opt = {});

/// Strong kappa forms with lambda_2, mu_{n-1}, q_2.
Verdict check_co3_3(GraphAnalysis& ctx, int k, CorVariant variant, CheckOptions opt = {});

/// The aD + bA forms: for b > 0 compare lambda_2(G,a,b) from above, for b < 0
/// compare lambda_{n-1}(G,a,b) from below, against (a+b) delta - b * penalty.
Verdict check_co3_general(GraphAnalysis& ctx, int k, double a, double b, Target target, CheckOptions opt = {});

/// Bipartite graphs: lambda_2 < delta - (k-1)/delta implies kappa' >= k.
Verdict check_co3_5(GraphAnalysis& ctx, int k, CheckOptions opt = {});

struct Lemma31Result {
  bool applicable = false;
  std::string reason;
  std::uint64_t n1_star = 0;
  bool holds = true;
  /// Sets X with d(X) < delta and |X| < n1*.
  std::vector<VertexSet> violations;
};

inline constexpr int kLemma31MaxOrder = 16;

/// Every proper non-empty X with d(X) < delta has |X| >= n1*(delta, g).
/// Exhaustive; throws GuardRefusal for n > 16. Inapplicable when delta < 2 or g infinite.
Lemma31Result check_lemma3_1(const Graph& g);

struct Lemma41Result {
  bool applicable = false;
  bool inequality_holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// If lambda_2(G,a) <= (a+1) delta - max(d(X)/|X|, d(Y)/|Y|) then
/// e(X,Y)^2 >= [(a+1) delta - d(X)/|X| - lambda_2][(a+1) delta - d(Y)/|Y| - lambda_2] |X||Y|.
/// Throws DomainError on empty or overlapping X, Y.
Lemma41Result check_lemma4_1(GraphAnalysis& ctx, const VertexSet& x, const VertexSet& y, double a);
Lemma41Result check_lemma4_1(const Graph& g, const VertexSet& x, const VertexSet& y, double a);

/// Parameters for the uniform dispatcher.
struct CheckParams {
  int k = 2;
  double a = 0.0;
  double b = 1.0;
  /// Cross-edge bound sampling: number of random disjoint pairs and their seed.
  std::size_t lemma_pairs = 200;
  std::uint64_t lemma_seed = 0;
  CheckOptions options;
};

/// Runs any theorem or lemma as a Verdict. Lemma verdicts are applicable when
/// their hypotheses can be evaluated and "verified" when no violation was found.
Verdict check(GraphAnalysis& ctx, TheoremId id, const CheckParams& params);

}  // namespace spectre
