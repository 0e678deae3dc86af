#include "spectre/theorems.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectre/bounds.hpp"
#include "spectre/errors.hpp"
#include "spectre/rng.hpp"

namespace spectre {

// ---------------------------------------------------------------- identifiers

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 16> kTheoremNames{{
    {TheoremId::Main1I, "MAIN1_I"},
    {TheoremId::Main1II, "MAIN1_II"},
    {TheoremId::Main2, "MAIN2"},
    {TheoremId::Cor2I, "COR2_I"},
    {TheoremId::Cor2II, "COR2_II"},
    {TheoremId::Cor2III, "COR2_III"},
    {TheoremId::Co32I, "CO3_2_I"},
    {TheoremId::Co32II, "CO3_2_II"},
    {TheoremId::Co33I, "CO3_3_I"},
    {TheoremId::Co33II, "CO3_3_II"},
    {TheoremId::Co33III, "CO3_3_III"},
    {TheoremId::Co35, "CO3_5"},
    {TheoremId::Th43I, "TH4_3_I"},
    {TheoremId::Th43II, "TH4_3_II"},
    {TheoremId::Lemma31, "LEMMA3_1"},
    {TheoremId::Lemma41, "LEMMA4_1"},
}};

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [key, name] : kTheoremNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (const auto& [key, text] : kTheoremNames) {
    if (text == name) return key;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& entry : kTheoremNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

std::string_view to_string(Target target) {
  switch (target) {
    case Target::KappaStrong:
      return "kappa_strong";
    case Target::KappaWeak:
      return "kappa_weak";
    case Target::Tau:
      return "tau";
  }
  return "unknown";
}

// ---------------------------------------------------------------- GraphAnalysis

GraphAnalysis::GraphAnalysis(Graph g) : graph_(std::move(g)) {}

const DegreeStats& GraphAnalysis::degrees() {
  if (!degrees_) degrees_ = degree_stats(graph_);
  return *degrees_;
}

Girth GraphAnalysis::girth() {
  if (!girth_) girth_ = spectre::girth(graph_);
  return *girth_;
}

bool GraphAnalysis::bipartite() {
  if (!bipartite_) bipartite_ = is_bipartite(graph_);
  return *bipartite_;
}

bool GraphAnalysis::connected() {
  if (!connected_) connected_ = is_connected(graph_);
  return *connected_;
}

const Spectrum& GraphAnalysis::spectrum(const MatrixKind& kind) {
  const auto key = std::make_pair(kind.a(), kind.b());
  auto it = spectra_.find(key);
  if (it == spectra_.end()) it = spectra_.emplace(key, spectre::spectrum(graph_, kind)).first;
  return it->second;
}

std::size_t GraphAnalysis::edge_connectivity() {
  if (!kappa_) kappa_ = spectre::edge_connectivity(graph_).value;
  return *kappa_;
}

bool GraphAnalysis::tau_at_least(int k) {
  if (tau_) return *tau_ >= k;
  auto it = tau_at_least_.find(k);
  if (it != tau_at_least_.end()) return it->second;
  const bool answer = spectre::tau_at_least(graph_, k, {.canonicalize = false}).answer;
  tau_at_least_.emplace(k, answer);
  return answer;
}

int GraphAnalysis::tau() {
  if (!tau_) tau_ = spectre::tau(graph_);
  return *tau_;
}

// ---------------------------------------------------------------- checkers

namespace {

std::string claim(Target target, int k) {
  return (target == Target::Tau ? "tau >= " : "kappa' >= ") + std::to_string(k);
}

bool exact_requested(GraphAnalysis& ctx, const CheckOptions& opt) {
  return opt.exact.value_or(ctx.order() <= kDefaultExactMaxOrder);
}

void verify_conclusion(GraphAnalysis& ctx, Verdict& v, const CheckOptions& opt) {
  if (!exact_requested(ctx, opt)) return;
  if (v.target == Target::Tau) {
    const bool ok = ctx.tau_at_least(v.k);
    v.exact.tau_at_least_k = ok;
    v.conclusion_verified = ok;
  } else {
    const std::size_t kappa = ctx.edge_connectivity();
    v.exact.edge_connectivity = kappa;
    v.conclusion_verified = kappa >= static_cast<std::size_t>(v.k);
  }
}

void apply_comparison(Verdict& v, double eigen, double threshold, bool eigen_below, bool strict) {
  v.eigenvalue = eigen;
  v.threshold = threshold;
  if (eigen_below) {
    v.relation = strict ? "<" : "<=";
    v.hypothesis_holds = strict ? eigen < threshold : eigen <= threshold;
    v.margin = threshold - eigen;
  } else {
    v.relation = strict ? ">" : ">=";
    v.hypothesis_holds = strict ? eigen > threshold : eigen >= threshold;
    v.margin = eigen - threshold;
  }
}

Verdict not_applicable(Verdict v, std::string reason) {
  v.applicable = false;
  v.reason = std::move(reason);
  return v;
}

/// Shared core of every spectral criterion: compare an extreme non-principal
/// eigenvalue of aD + bA with (a+b) delta - b * penalty(target).
Verdict evaluate_form(GraphAnalysis& ctx, TheoremId id, int k, double a, double b, Target target,
                      const CheckOptions& opt) {
  Verdict v;
  v.theorem = id;
  v.target = target;
  v.k = k;
  v.a = a;
  v.b = b;
  v.conclusion_claim = claim(target, k);
  v.eigenvalue_label = b > 0 ? "lambda_2(G,a,b)" : "lambda_{n-1}(G,a,b)";

  if (!std::isfinite(a) || !std::isfinite(b) || b == 0.0) return not_applicable(v, "requires finite a and b != 0");
  if (a / b < -1.0) return not_applicable(v, "requires a/b >= -1");
  const int n = ctx.order();
  if (n < 2) return not_applicable(v, "requires n >= 2");
  if (k < 2) return not_applicable(v, "requires k >= 2");
  const int delta = ctx.degrees().min_degree;
  if (target == Target::Tau && delta < 2 * k) return not_applicable(v, "requires min degree >= 2k");
  if (target != Target::Tau && delta < k) return not_applicable(v, "requires min degree >= k");
  const Girth g = ctx.girth();
  if (!g.finite()) return not_applicable(v, "requires finite girth");

  double penalty = 0.0;
  switch (target) {
    case Target::Tau:
      penalty = tau_penalty(delta, k, g);
      break;
    case Target::KappaWeak:
      penalty = kappa_weak_penalty(delta, k, g);
      break;
    case Target::KappaStrong: {
      const std::uint64_t n1 = n1_star(delta, g);
      if (static_cast<std::uint64_t>(n) < 2 * n1) return not_applicable(v, "requires n >= 2 n1*");
      penalty = kappa_strong_penalty(delta, k, g, n);
      break;
    }
  }
  const double threshold = (a + b) * static_cast<double>(delta) - b * penalty;
  const Spectrum& spec = ctx.spectrum(MatrixKind(a, b));
  const bool upper = b > 0;
  const double eigen = upper ? spec.lambda(2) : spec.lambda(static_cast<std::size_t>(n) - 1);
  v.applicable = true;
  apply_comparison(v, eigen, threshold, upper, target != Target::KappaStrong);
  verify_conclusion(ctx, v, opt);
  return v;
}

double shift_for(CorVariant variant) {
  switch (variant) {
    case CorVariant::I:
      return 0.0;
    case CorVariant::II:
      return -1.0;
    case CorVariant::III:
      return 1.0;
  }
  return 0.0;
}

/// Rewrites a lambda_2(G,a) verdict in the mu / q vocabulary of the corollaries.
Verdict relabel(Verdict v, TheoremId id, CorVariant variant) {
  v.theorem = id;
  switch (variant) {
    case CorVariant::I:
      v.eigenvalue_label = "lambda_2(G)";
      break;
    case CorVariant::II:
      // -D + A = -L, so lambda_2(G,-1) = -mu_{n-1}; the inequality flips and the margin is unchanged.
      v.eigenvalue_label = "mu_{n-1}(G)";
      if (v.eigenvalue) v.eigenvalue = -*v.eigenvalue;
      if (v.threshold) v.threshold = -*v.threshold;
      if (v.relation == "<") {
        v.relation = ">";
      } else if (v.relation == "<=") {
        v.relation = ">=";
      }
      break;
    case CorVariant::III:
      v.eigenvalue_label = "q_2(G)";
      break;
  }
  return v;
}

}  // namespace

Verdict check_main1(GraphAnalysis& ctx, int k, double a, Main1Variant variant, CheckOptions opt) {
  const bool strong = variant == Main1Variant::Strong;
  Verdict v = evaluate_form(ctx, strong ? TheoremId::Main1I : TheoremId::Main1II, k, a, 1.0,
                            strong ? Target::KappaStrong : Target::KappaWeak, opt);
  v.eigenvalue_label = "lambda_2(G,a)";
  return v;
}

Verdict check_main2(GraphAnalysis& ctx, int k, double a, CheckOptions opt) {
  Verdict v = evaluate_form(ctx, TheoremId::Main2, k, a, 1.0, Target::Tau, opt);
  v.eigenvalue_label = "lambda_2(G,a)";
  return v;
}

Verdict check_cor2(GraphAnalysis& ctx, int k, CorVariant variant, CheckOptions opt) {
  static constexpr std::array ids{TheoremId::Cor2I, TheoremId::Cor2II, TheoremId::Cor2III};
  return relabel(check_main2(ctx, k, shift_for(variant), opt), ids[static_cast<int>(variant)], variant);
}

Verdict check_co3_3(GraphAnalysis& ctx, int k, CorVariant variant, CheckOptions opt) {
  static constexpr std::array ids{TheoremId::Co33I, TheoremId::Co33II, TheoremId::Co33III};
  return relabel(check_main1(ctx, k, shift_for(variant), Main1Variant::Strong, opt), ids[static_cast<int>(variant)],
                 variant);
}

Verdict check_co3_general(GraphAnalysis& ctx, int k, double a, double b, Target target, CheckOptions opt) {
  TheoremId id = TheoremId::Co32I;
  if (target == Target::Tau) {
    id = b < 0 ? TheoremId::Th43II : TheoremId::Th43I;
  } else {
    id = b < 0 ? TheoremId::Co32II : TheoremId::Co32I;
  }
  return evaluate_form(ctx, id, k, a, b, target, opt);
}

Verdict check_co3_5(GraphAnalysis& ctx, int k, CheckOptions opt) {
  Verdict v;
  v.theorem = TheoremId::Co35;
  v.target = Target::KappaWeak;
  v.k = k;
  v.conclusion_claim = claim(Target::KappaWeak, k);
  v.eigenvalue_label = "lambda_2(G)";
  if (ctx.order() < 2) return not_applicable(v, "requires n >= 2");
  if (!ctx.bipartite()) return not_applicable(v, "requires a bipartite graph");
  if (k < 2) return not_applicable(v, "requires k >= 2");
  const int delta = ctx.degrees().min_degree;
  if (delta < k) return not_applicable(v, "requires min degree >= k");

  const double threshold = static_cast<double>(delta) - static_cast<double>(k - 1) / static_cast<double>(delta);
  // Bipartite with delta >= 2 means girth >= 4, where the weak threshold reduces to this one.
  if (threshold != kappa_threshold_weak(delta, k, Girth(4), 0.0)) {
    throw std::logic_error("bipartite threshold disagrees with the girth-4 weak threshold");
  }
  v.applicable = true;
  apply_comparison(v, ctx.spectrum(MatrixKind::adjacency()).lambda(2), threshold, true, true);
  verify_conclusion(ctx, v, opt);
  return v;
}

Lemma31Result check_lemma3_1(const Graph& g) {
  const int n = g.order();
  if (n > kLemma31MaxOrder) {
    throw GuardRefusal("small-cut enumeration refused for n = " + std::to_string(n) + " > " +
                       std::to_string(kLemma31MaxOrder));
  }
  Lemma31Result out;
  if (n < 3) {
    out.reason = "requires min degree >= 2";
    return out;
  }
  const int delta = degree_stats(g).min_degree;
  if (delta < 2) {
    out.reason = "requires min degree >= 2";
    return out;
  }
  const Girth gg = girth(g);
  if (!gg.finite()) {
    out.reason = "requires finite girth";
    return out;
  }
  out.applicable = true;
  out.n1_star = n1_star(delta, gg);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (boundary_mask(g, mask) < static_cast<std::size_t>(delta) &&
        static_cast<std::uint64_t>(std::popcount(mask)) < out.n1_star) {
      out.violations.push_back(VertexSet::from_mask(mask, n));
    }
  }
  out.holds = out.violations.empty();
  return out;
}

Lemma41Result check_lemma4_1(GraphAnalysis& ctx, const VertexSet& x, const VertexSet& y, double a) {
  const Graph& g = ctx.graph();
  const double exy = static_cast<double>(cross_edges(g, x, y));
  const double lambda2 = ctx.spectrum(MatrixKind::shifted(a)).lambda(2);
  const double base = (a + 1.0) * ctx.degrees().min_degree;
  const double fx = static_cast<double>(boundary(g, x)) / static_cast<double>(x.size());
  const double fy = static_cast<double>(boundary(g, y)) / static_cast<double>(y.size());
  Lemma41Result out;
  out.lhs = exy * exy;
  out.rhs = (base - fx - lambda2) * (base - fy - lambda2) * static_cast<double>(x.size()) *
            static_cast<double>(y.size());
  out.applicable = lambda2 <= base - std::max(fx, fy);
  if (out.applicable) out.inequality_holds = out.lhs >= out.rhs - 1e-8 * (1.0 + std::abs(out.rhs));
  return out;
}

Lemma41Result check_lemma4_1(const Graph& g, const VertexSet& x, const VertexSet& y, double a) {
  GraphAnalysis ctx(g);
  return check_lemma4_1(ctx, x, y, a);
}

// ---------------------------------------------------------------- dispatcher

namespace {

Verdict lemma3_1_verdict(GraphAnalysis& ctx) {
  Verdict v;
  v.theorem = TheoremId::Lemma31;
  v.conclusion_claim = "|X| >= n1* whenever d(X) < delta";
  const Lemma31Result r = check_lemma3_1(ctx.graph());
  if (!r.applicable) return not_applicable(v, r.reason);
  v.applicable = true;
  v.hypothesis_holds = true;
  v.conclusion_verified = r.holds;
  return v;
}

Verdict lemma4_1_verdict(GraphAnalysis& ctx, const CheckParams& params) {
  Verdict v;
  v.theorem = TheoremId::Lemma41;
  v.a = params.a;
  v.conclusion_claim = "e(X,Y)^2 lower bound";
  const int n = ctx.order();
  if (n < 2) return not_applicable(v, "requires n >= 2");
  if (!(params.a >= -1.0)) return not_applicable(v, "requires a >= -1");
  Engine rng(params.lemma_seed);
  std::size_t applicable = 0;
  bool violated = false;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < params.lemma_pairs; ++trial) {
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    while (xs.empty() || ys.empty()) {
      xs.clear();
      ys.clear();
      for (Vertex u = 0; u < n; ++u) {
        const auto side = uniform_below(rng, 3);
        if (side == 0) xs.push_back(u);
        if (side == 1) ys.push_back(u);
      }
    }
    const Lemma41Result r = check_lemma4_1(ctx, VertexSet(xs), VertexSet(ys), params.a);
    if (!r.applicable) continue;
    ++applicable;
    worst = std::min(worst, r.lhs - r.rhs);
    violated = violated || !r.inequality_holds;
  }
  if (applicable == 0) return not_applicable(v, "no sampled pair satisfied the eigenvalue hypothesis");
  v.applicable = true;
  v.hypothesis_holds = true;
  v.margin = worst;
  v.conclusion_verified = !violated;
  return v;
}

Verdict expect_sign(Verdict v, bool want_negative) {
  if (v.applicable && (v.b < 0) != want_negative) {
    return not_applicable(v, want_negative ? "requires b < 0" : "requires b > 0");
  }
  return v;
}

}  // namespace

Verdict check(GraphAnalysis& ctx, TheoremId id, const CheckParams& p) {
  switch (id) {
    case TheoremId::Main1I:
      return check_main1(ctx, p.k, p.a, Main1Variant::Strong, p.options);
    case TheoremId::Main1II:
      return check_main1(ctx, p.k, p.a, Main1Variant::Weak, p.options);
    case TheoremId::Main2:
      return check_main2(ctx, p.k, p.a, p.options);
    case TheoremId::Cor2I:
      return check_cor2(ctx, p.k, CorVariant::I, p.options);
    case TheoremId::Cor2II:
      return check_cor2(ctx, p.k, CorVariant::II, p.options);
    case TheoremId::Cor2III:
      return check_cor2(ctx, p.k, CorVariant::III, p.options);
    case TheoremId::Co32I:
    case TheoremId::Co32II: {
      Verdict v = check_co3_general(ctx, p.k, p.a, p.b, Target::KappaStrong, p.options);
      v.theorem = id;
      return expect_sign(std::move(v), id == TheoremId::Co32II);
    }
    case TheoremId::Th43I:
    case TheoremId::Th43II: {
      Verdict v = check_co3_general(ctx, p.k, p.a, p.b, Target::Tau, p.options);
      v.theorem = id;
      return expect_sign(std::move(v), id == TheoremId::Th43II);
    }
    case TheoremId::Co33I:
      return check_co3_3(ctx, p.k, CorVariant::I, p.options);
    case TheoremId::Co33II:
      return check_co3_3(ctx, p.k, CorVariant::II, p.options);
    case TheoremId::Co33III:
      return check_co3_3(ctx, p.k, CorVariant::III, p.options);
    case TheoremId::Co35:
      return check_co3_5(ctx, p.k, p.options);
    case TheoremId::Lemma31:
      return lemma3_1_verdict(ctx);
    case TheoremId::Lemma41:
      return lemma4_1_verdict(ctx, p);
  }
  throw std::logic_error("unhandled theorem id");
}

}  // namespace spectre
