#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "spectre/connectivity.hpp"
#include "spectre/errors.hpp"
#include "spectre/generators.hpp"
#include "spectre/oracles.hpp"
#include "spectre/rng.hpp"
#include "spectre/spectral.hpp"
#include "spectre/theorems.hpp"

namespace spectre::cli {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

int draw(Engine& rng, int lo, int hi) { return lo + static_cast<int>(uniform_below(rng, hi - lo + 1)); }

double draw_p(Engine& rng, double lo, double hi) { return lo + (hi - lo) * oracle::uniform01(rng); }

/// Returns an empty string when the trial agrees, a description otherwise.
using Trial = std::function<std::string(Engine&, bool)>;

std::string tau_trial(Engine& rng, bool fault) {
  const Graph g = oracle::random_connected_gnp(draw(rng, 2, 8), draw_p(rng, 0.3, 0.9), rng);
  const int k = draw(rng, 1, 3);
  const TauDecision d = tau_at_least(g, k);
  const bool answer = fault ? !d.answer : d.answer;
  const bool expected = nash_williams_oracle(g, k).holds;
  if (answer != expected) return "tau >= " + std::to_string(k) + " disagrees on " + to_graph6(g);
  const bool evidence_ok = d.answer ? verify_tree_packing(g, std::get<TreePacking>(d.evidence), true)
                                    : verify_certificate(g, std::get<PartitionCertificate>(d.evidence), k);
  if (!evidence_ok) return "invalid evidence for tau >= " + std::to_string(k) + " on " + to_graph6(g);
  return {};
}

std::string kappa_trial(Engine& rng, bool fault) {
  const Graph g = oracle::random_gnp(draw(rng, 2, 12), draw_p(rng, 0.2, 0.9), rng);
  const EdgeCut cut = edge_connectivity(g);
  const std::size_t value = cut.value + (fault ? 1 : 0);
  const std::size_t expected = brute_force_edge_connectivity(g);
  if (value != expected) {
    return "kappa' = " + std::to_string(value) + " vs " + std::to_string(expected) + " on " + to_graph6(g);
  }
  if (boundary(g, cut.witness) != cut.value) return "cut witness does not match its value on " + to_graph6(g);
  return {};
}

std::string girth_trial(Engine& rng, bool fault) {
  const Graph g = oracle::random_gnp(draw(rng, 3, 12), draw_p(rng, 0.1, 0.6), rng);
  Girth got = girth(g);
  if (fault) got = got.finite() ? Girth(got.value() + 1) : Girth(3);
  const Girth expected = oracle::girth_by_cycles(g);
  if (got != expected) return "girth " + got.to_string() + " vs " + expected.to_string() + " on " + to_graph6(g);
  return {};
}

std::string compare_spectra(const std::vector<double>& got, const std::vector<double>& expected,
                            const std::string& what) {
  if (got.size() != expected.size()) return what + ": size mismatch";
  double scale = 1.0;
  for (double x : expected) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (std::abs(got[i] - expected[i]) > 1e-9 * scale) {
      std::ostringstream msg;
      msg.precision(17);
      msg << what << ": eigenvalue " << i + 1 << " = " << got[i] << " vs " << expected[i];
      return msg.str();
    }
  }
  return {};
}

std::string eigen_trial(Engine& rng, bool fault) {
  std::vector<double> got;
  std::vector<double> expected;
  std::string what;
  switch (uniform_below(rng, 5)) {
    case 0: {
      const int n = draw(rng, 1, 14);
      got = spectrum(complete(n), MatrixKind::adjacency()).values;
      expected = oracle::complete_spectrum(n);
      what = "K_" + std::to_string(n);
      break;
    }
    case 1: {
      const int n = draw(rng, 3, 24);
      got = spectrum(cycle(n), MatrixKind::adjacency()).values;
      expected = oracle::cycle_spectrum(n);
      what = "C_" + std::to_string(n);
      break;
    }
    case 2: {
      const int l = draw(rng, 1, 8);
      const int r = draw(rng, 1, 8);
      got = spectrum(complete_bipartite(l, r), MatrixKind::adjacency()).values;
      expected = oracle::complete_bipartite_spectrum(l, r);
      what = "K_{" + std::to_string(l) + "," + std::to_string(r) + "}";
      break;
    }
    case 3: {
      const int n = draw(rng, 3, 20);
      std::vector<int> offsets;
      for (int s = 1; s <= n / 2; ++s)
        if (uniform_below(rng, 2)) offsets.push_back(s);
      if (offsets.empty()) offsets.push_back(1);
      got = spectrum(circulant(n, offsets), MatrixKind::adjacency()).values;
      expected = oracle::circulant_spectrum(n, offsets);
      what = "circulant n=" + std::to_string(n);
      break;
    }
    default: {
      const Graph g = oracle::random_gnp(draw(rng, 1, 16), draw_p(rng, 0.1, 0.9), rng);
      static const std::pair<double, double> kinds[] = {{0, 1}, {1, -1}, {1, 1}, {0.5, 1}, {-0.5, 1}, {0.5, -1}};
      const auto [a, b] = kinds[uniform_below(rng, std::size(kinds))];
      const SymmetricMatrix m = build_matrix(g, MatrixKind(a, b));
      got = eigenvalues(m).values;
      expected = oracle::jacobi_eigenvalues(m);
      what = "random graph " + to_graph6(g);
      break;
    }
  }
  if (fault) got.front() += 1e-3;
  return compare_spectra(got, expected, what);
}

std::string interlacing_trial(Engine& rng, bool fault) {
  const int n = draw(rng, 3, 12);
  const Graph g = oracle::random_gnp(n, draw_p(rng, 0.2, 0.9), rng);
  static const double as[] = {0.0, 1.0, -1.0, 0.5};
  const double a = as[uniform_below(rng, std::size(as))];
  const SymmetricMatrix m = build_matrix(g, MatrixKind::shifted(a));
  const std::vector<double> theta = eigenvalues(m).values;

  std::vector<double> eta;
  std::string what;
  if (uniform_below(rng, 2) == 0) {
    const int blocks = draw(rng, 1, n - 1);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = static_cast<int>(uniform_below(rng, blocks));
    eta = quotient_eigenvalues(quotient_matrix(m, Partition::from_labels(labels)));
    what = "quotient";
  } else {
    std::vector<std::size_t> keep;
    for (int i = 0; i < n; ++i)
      if (uniform_below(rng, 2)) keep.push_back(i);
    if (keep.empty() || static_cast<int>(keep.size()) == n) keep = {0};
    eta = eigenvalues(m.principal_submatrix(keep)).values;
    what = "principal submatrix";
  }
  if (fault) eta.front() = theta.front() + 1.0;
  const Interlacing r = check_interlacing(theta, eta);
  if (!r.holds) return what + " eigenvalues fail to interlace on " + to_graph6(g);
  return {};
}

std::string lemma3_1_trial(Engine& rng, bool fault) {
  Graph g;
  do {
    g = oracle::random_gnp(draw(rng, 3, 12), draw_p(rng, 0.3, 0.9), rng);
  } while (degree_stats(g).min_degree < 2);
  const Lemma31Result r = check_lemma3_1(g);
  if (!r.applicable) return {};  // forests only; min degree >= 2 always gives a cycle
  if (!r.holds || fault) return "small set with small boundary below n1* on " + to_graph6(g);
  return {};
}

std::string lemma4_1_trial(Engine& rng, bool fault) {
  const int n = draw(rng, 2, 12);
  const Graph g = oracle::random_gnp(n, draw_p(rng, 0.3, 1.0), rng);
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = static_cast<int>(uniform_below(rng, 3));  // 2 = neither
  if (std::count(labels.begin(), labels.end(), 0) == 0) labels[0] = 0;
  if (std::count(labels.begin(), labels.end(), 1) == 0) {
    const auto it = std::find_if(labels.begin(), labels.end(), [](int l) { return l != 0; });
    *(it == labels.end() ? labels.end() - 1 : it) = 1;
  }
  std::vector<int> x;
  std::vector<int> y;
  for (int v = 0; v < n; ++v) {
    if (labels[v] == 0) x.push_back(v);
    if (labels[v] == 1) y.push_back(v);
  }
  static const double as[] = {0.0, 1.0, -1.0, 0.5, 3.0};
  const double a = as[uniform_below(rng, std::size(as))];
  const Lemma41Result r = check_lemma4_1(g, VertexSet(x), VertexSet(y), a);
  if (r.applicable && (!r.inequality_holds || fault)) return "cross-edge inequality fails on " + to_graph6(g);
  if (!r.applicable && fault) return "fault injected on " + to_graph6(g);
  return {};
}

std::string catlin_trial(Engine& rng, bool fault) {
  Graph g;
  do {
    g = oracle::random_connected_gnp(draw(rng, 2, kCatlinLaiShaoMaxOrder), draw_p(rng, 0.3, 0.8), rng);
  } while (g.size() > kCatlinLaiShaoMaxSize);
  const int k = draw(rng, 1, kCatlinLaiShaoMaxK);
  const CatlinLaiShaoResult r = check_catlin_lai_shao(g, k);
  if (r.equiv_holds == fault) {
    return "kappa' >= 2k and the deletion condition disagree for k = " + std::to_string(k) + " on " + to_graph6(g);
  }
  return {};
}

const std::map<std::string, Trial>& suites() {
  static const std::map<std::string, Trial> table = {
      {"tau", tau_trial},         {"kappa", kappa_trial},       {"girth", girth_trial},
      {"eigen", eigen_trial},     {"interlacing", interlacing_trial}, {"lemma3_1", lemma3_1_trial},
      {"lemma4_1", lemma4_1_trial}, {"catlin", catlin_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tau",      "kappa",    "girth",  "eigen",
                                                 "interlacing", "lemma3_1", "lemma4_1", "catlin"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed, bool inject_fault) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw ParseError("unknown oracle suite '" + name + "'");
  SuiteResult result;
  result.name = name;
  result.trials = trials;
  const auto& names = suite_names();
  const std::uint64_t suite_index = std::find(names.begin(), names.end(), name) - names.begin();
  const std::uint64_t suite_seed = derive_seed(seed, suite_index);
  for (std::size_t i = 0; i < trials; ++i) {
    Engine rng(derive_seed(suite_seed, i));
    const std::string failure = it->second(rng, inject_fault);
    if (failure.empty()) {
      ++result.passed;
    } else if (result.failures.size() < kMaxReportedFailures) {
      result.failures.push_back("trial " + std::to_string(i) + ": " + failure);
    }
  }
  return result;
}

}  // namespace spectre::cli
