// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spectre/bounds.hpp"
#include "spectre/connectivity.hpp"
#include "spectre/errors.hpp"
#include "spectre/generators.hpp"
#include "spectre/oracles.hpp"
#include "spectre/spectral.hpp"
#include "spectre/theorems.hpp"

using namespace spectre;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

int draw(Engine& rng, int lo, int hi) { return lo + static_cast<int>(uniform_below(rng, hi - lo + 1)); }

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol; }

std::string count_note(std::size_t count, const char* what) { return std::to_string(count) + " " + what; }

// ---------------------------------------------------------------- AC1

Outcome formula_fixtures() {
  Outcome o;
  for (int d = 2; d <= 50; ++d) {
    if (n1_star(d, 3) != static_cast<std::uint64_t>(d + 1)) o.fail("n1*(d,3) != d+1 at d=" + std::to_string(d));
    if (n1_star(d, 4) != static_cast<std::uint64_t>(2 * d)) o.fail("n1*(d,4) != 2d at d=" + std::to_string(d));
  }
  if (n1_star(3, 5) != 8) o.fail("n1*(3,5) != 8");
  if (n1_star(3, 6) != 12) o.fail("n1*(3,6) != 12");
  if (moore_bound(3, 5) != 10) o.fail("moore(3,5) != 10");
  if (moore_bound(3, 6) != 14) o.fail("moore(3,6) != 14");
  const Graph p = petersen();
  const Graph h = heawood();
  if (static_cast<std::uint64_t>(p.order()) != moore_bound(3, girth(p))) o.fail("Petersen order != Moore bound");
  if (static_cast<std::uint64_t>(h.order()) != moore_bound(3, girth(h))) o.fail("Heawood order != Moore bound");
  if (o.ok) o.detail = "n1* grid for delta in [2,50], Petersen and Heawood attain the Moore bound";
  return o;
}

// ---------------------------------------------------------------- AC2

void compare_spectrum(Outcome& o, const std::string& name, const Graph& g, const std::vector<double>& expected,
                      std::size_t& checked) {
  const SymmetricMatrix m = build_matrix(g, MatrixKind::adjacency());
  const Spectrum s = eigenvalues(m);
  const double tol = 1e-9 * (1.0 + m.norm_inf());
  if (s.values.size() != expected.size()) {
    o.fail(name + ": wrong spectrum length");
    return;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!close(s.values[i], expected[i], tol)) {
      std::ostringstream msg;
      msg << name << ": eigenvalue " << i + 1 << " is " << s.values[i] << ", expected " << expected[i];
      o.fail(msg.str());
    }
  }
  ++checked;
}

Outcome eigensolver_accuracy() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 30; ++n) compare_spectrum(o, "K" + std::to_string(n), complete(n), oracle::complete_spectrum(n), checked);
  for (int n = 3; n <= 60; ++n) compare_spectrum(o, "C" + std::to_string(n), cycle(n), oracle::cycle_spectrum(n), checked);
  for (int a = 1; a <= 15; ++a) {
    for (int b = 1; b <= 15; ++b) {
      compare_spectrum(o, "K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite(a, b),
                       oracle::complete_bipartite_spectrum(a, b), checked);
    }
  }
  for (int n = 5; n <= 40; ++n) {
    const std::vector<std::vector<int>> offset_sets{{1, 2}, {1, 3}, {2, n / 2}, {1, 2, (n - 1) / 2}};
    for (const auto& offsets : offset_sets) {
      bool valid = true;
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        valid = valid && offsets[i] >= 1 && 2 * offsets[i] <= n;
        for (std::size_t j = 0; j < i; ++j) valid = valid && offsets[i] != offsets[j];
      }
      if (!valid) continue;
      compare_spectrum(o, "circulant(" + std::to_string(n) + ")", circulant(n, offsets),
                       oracle::circulant_spectrum(n, offsets), checked);
    }
  }
  compare_spectrum(o, "Petersen", petersen(), {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}, checked);

  const double tol = 1e-9 * 10.0;
  if (!close(lambda_i(petersen(), MatrixKind::adjacency(), 2), 1.0, tol)) o.fail("lambda_2(Petersen) != 1");
  if (!close(lambda_i(complete(6), MatrixKind::adjacency(), 2), -1.0, tol)) o.fail("lambda_2(K6) != -1");
  if (!close(lambda_i(complete(4), MatrixKind::laplacian(), 3), 4.0, tol)) o.fail("mu_{n-1}(K4) != 4");
  if (!close(lambda_i(complete(4), MatrixKind::signless(), 2), 2.0, tol)) o.fail("q_2(K4) != 2");
  if (o.ok) o.detail = count_note(checked, "closed-form spectra matched, four exact values confirmed");
  return o;
}

// ---------------------------------------------------------------- AC3

Outcome tau_oracle_equivalence() {
  Outcome o;
  Engine rng(derive_seed(3, 0));
  std::size_t decisions = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_connected_gnp(draw(rng, 2, 8), 0.25 + 0.7 * oracle::uniform01(rng), rng);
    for (int k = 1; k <= 3; ++k) {
      const bool expected = nash_williams_oracle(g, k).holds;
      const TauDecision canonical = tau_at_least(g, k);
      const TauDecision raw = tau_at_least(g, k, {false});
      ++decisions;
      const std::string where = " on " + to_graph6(g) + " k=" + std::to_string(k);
      if (canonical.answer != expected || raw.answer != expected) {
        o.fail("answer disagrees with the partition oracle" + where);
        continue;
      }
      for (const TauDecision* d : {&canonical, &raw}) {
        const bool valid = d->answer ? verify_tree_packing(g, std::get<TreePacking>(d->evidence), true)
                                     : verify_certificate(g, std::get<PartitionCertificate>(d->evidence), k);
        if (!valid) o.fail("evidence rejected" + where);
      }
    }
  }
  if (o.ok) o.detail = count_note(decisions, "decisions agree, all packings and certificates verified");
  return o;
}

// ---------------------------------------------------------------- AC4

Outcome kappa_oracle_equivalence() {
  Outcome o;
  Engine rng(derive_seed(4, 0));
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_gnp(draw(rng, 2, 12), 0.15 + 0.8 * oracle::uniform01(rng), rng);
    const EdgeCut cut = edge_connectivity(g);
    const std::size_t expected = brute_force_edge_connectivity(g);
    if (cut.value != expected) o.fail("Stoer-Wagner disagrees on " + to_graph6(g));
    if (boundary(g, cut.witness) != cut.value) o.fail("cut witness does not realize the value on " + to_graph6(g));
  }
  if (o.ok) o.detail = "500 graphs, zero mismatches";
  return o;
}

// ---------------------------------------------------------------- AC5

struct SweepTally {
  std::size_t evaluated = 0;
  std::size_t hypothesis = 0;
  std::size_t violations = 0;
  std::string first;

  void add(const Verdict& v, const std::string& where) {
    ++evaluated;
    if (!v.applicable || !v.hypothesis_holds) return;
    ++hypothesis;
    if (v.conclusion_verified != true) {
      ++violations;
      if (first.empty()) first = std::string(to_string(v.theorem)) + " k=" + std::to_string(v.k) + where;
    }
  }
};

Outcome theorem_soundness() {
  Outcome o;
  SweepTally tau_side;
  SweepTally kappa_side;
  const CheckOptions exact{true};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint64_t seed = derive_seed(5, i);
    const int n = 30 + static_cast<int>(seed % 31);
    GraphAnalysis ctx(random_regular(n, 6, seed));
    const std::string where = " on random_regular:n=" + std::to_string(n) + ",d=6,seed=" + std::to_string(seed);
    for (double a : {0.0, 1.0, -1.0}) tau_side.add(check_main2(ctx, 2, a, exact), where);
    for (CorVariant c : {CorVariant::I, CorVariant::II, CorVariant::III}) tau_side.add(check_cor2(ctx, 2, c, exact), where);
    for (int k : {2, 3}) {
      for (double a : {0.0, 1.0, -1.0}) {
        kappa_side.add(check_main1(ctx, k, a, Main1Variant::Weak, exact), where);
        kappa_side.add(check_main1(ctx, k, a, Main1Variant::Strong, exact), where);
      }
    }
  }
  if (tau_side.violations) o.fail("tau violation: " + tau_side.first);
  if (kappa_side.violations) o.fail("kappa violation: " + kappa_side.first);

  std::size_t cages_verified = 0;
  for (const Graph& g : {petersen(), heawood(), mcgee(), tutte_coxeter()}) {
    GraphAnalysis ctx(g);
    const Verdict v = check_main1(ctx, 2, 0.0, Main1Variant::Weak, exact);
    if (!v.applicable || !v.hypothesis_holds || v.conclusion_verified != true) {
      o.fail("cage with n=" + std::to_string(g.order()) + " not verified under MAIN1_II");
    } else {
      ++cages_verified;
    }
  }
  GraphAnalysis pet(petersen());
  const Verdict pv = check_main1(pet, 2, 0.0, Main1Variant::Weak, exact);
  if (!(pv.eigenvalue && close(*pv.eigenvalue, 1.0, 1e-9) && pv.threshold == 2.75 && pv.exact.edge_connectivity == 3u)) {
    o.fail("Petersen MAIN1_II values differ from lambda_2 = 1 < 2.75, kappa' = 3");
  }
  if (o.ok) {
    o.detail = "tau forms: " + std::to_string(tau_side.hypothesis) + "/" + std::to_string(tau_side.evaluated) +
               " hypotheses held; kappa forms: " + std::to_string(kappa_side.hypothesis) + "/" +
               std::to_string(kappa_side.evaluated) + "; " + std::to_string(cages_verified) +
               " cages verified; zero violations";
  }
  return o;
}

// ---------------------------------------------------------------- AC6

Outcome lemma_suites() {
  Outcome o;
  Engine rng(derive_seed(6, 0));

  std::size_t small_cut_graphs = 0;
  while (small_cut_graphs < 300) {
    const Graph g = oracle::random_connected_gnp(draw(rng, 3, 8), 0.3 + 0.6 * oracle::uniform01(rng), rng);
    if (degree_stats(g).min_degree < 2) continue;
    const Lemma31Result r = check_lemma3_1(g);
    if (!r.applicable || !r.holds) o.fail("small-cut bound fails on " + to_graph6(g));
    ++small_cut_graphs;
  }
  std::size_t cages_checked = 0;
  std::size_t cages_refused = 0;
  for (const Graph& g : {petersen(), heawood(), mcgee(), tutte_coxeter()}) {
    try {
      const Lemma31Result r = check_lemma3_1(g);
      if (!r.applicable || !r.holds) o.fail("small-cut bound fails on a cage");
      ++cages_checked;
    } catch (const GuardRefusal&) {
      if (g.order() <= kLemma31MaxOrder) o.fail("guard refused a cage with n <= 16");
      ++cages_refused;
    }
  }

  // Cross-edge bound: 200 applicable triples on each of 50 graphs.
  std::size_t cross_graphs = 0;
  for (std::uint64_t i = 0; cross_graphs < 50 && i < 200; ++i) {
    const int n = draw(rng, 10, 22);
    const int d = draw(rng, n / 2 + 1, n - 2);
    if ((n * d) % 2) continue;
    GraphAnalysis ctx(random_regular(n, d, derive_seed(61, i)));
    std::size_t applicable = 0;
    for (int attempt = 0; attempt < 20000 && applicable < 200; ++attempt) {
      std::vector<int> x;
      std::vector<int> y;
      const auto parts = 2 + uniform_below(rng, 2);
      for (int v = 0; v < n; ++v) {
        const auto r = uniform_below(rng, parts);
        if (r == 0) x.push_back(v);
        if (r == 1) y.push_back(v);
      }
      if (x.empty() || y.empty()) continue;
      const double a = -1.0 + 2.0 * oracle::uniform01(rng);
      const Lemma41Result r = check_lemma4_1(ctx, VertexSet(x), VertexSet(y), a);
      if (!r.applicable) continue;
      ++applicable;
      if (!r.inequality_holds) o.fail("cross-edge bound fails on " + to_graph6(ctx.graph()));
    }
    if (applicable < 200) o.fail("fewer than 200 applicable triples on " + to_graph6(ctx.graph()));
    ++cross_graphs;
  }
  if (cross_graphs < 50) o.fail("could not assemble 50 graphs for the cross-edge bound");

  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_gnp(draw(rng, 3, 16), oracle::uniform01(rng), rng);
    const int n = g.order();
    std::vector<int> labels(n);
    const int blocks = draw(rng, 1, n - 1);
    for (auto& l : labels) l = static_cast<int>(uniform_below(rng, blocks));
    const Partition p = Partition::from_labels(labels);
    const double a = -1.0 + 2.0 * oracle::uniform01(rng);
    const SymmetricMatrix m = build_matrix(g, MatrixKind::shifted(a));
    if (!check_interlacing(eigenvalues(m).values, quotient_eigenvalues(quotient_matrix(m, p))).holds) {
      o.fail("quotient eigenvalues do not interlace on " + to_graph6(g));
    }
  }

  const auto tight_equitable = [&](const Graph& g, const Partition& p, const char* name) {
    const SymmetricMatrix m = build_matrix(g, MatrixKind::adjacency());
    const Interlacing r = check_interlacing(eigenvalues(m).values, quotient_eigenvalues(quotient_matrix(m, p)));
    if (!r.holds || !r.tight || !is_equitable(g, p)) o.fail(std::string(name) + ": not tight and equitable");
  };
  tight_equitable(cycle(4), Partition({VertexSet{0, 2}, VertexSet{1, 3}}, 4), "C4");
  tight_equitable(petersen(), Partition({VertexSet{0, 1, 2, 3, 4}, VertexSet{5, 6, 7, 8, 9}}, 10), "Petersen");

  if (o.ok) {
    o.detail = std::to_string(small_cut_graphs) + " small graphs and " + std::to_string(cages_checked) +
               " cages pass the small-cut bound (" + std::to_string(cages_refused) + " refused by guard); " +
               std::to_string(cross_graphs) + " x 200 cross-edge triples; 200 quotient pairs interlace";
  }
  return o;
}

// ---------------------------------------------------------------- AC7

Outcome deletion_equivalence() {
  Outcome o;
  Engine rng(derive_seed(7, 0));
  std::size_t graphs = 0;
  while (graphs < 300) {
    const Graph g = oracle::random_connected_gnp(draw(rng, 2, 7), 0.3 + 0.7 * oracle::uniform01(rng), rng);
    if (g.size() > 14) continue;
    for (int k = 1; k <= 2; ++k) {
      const CatlinLaiShaoResult r = check_catlin_lai_shao(g, k);
      if (!r.equiv_holds || r.counterexample) o.fail("equivalence fails on " + to_graph6(g) + " k=" + std::to_string(k));
    }
    ++graphs;
  }
  if (o.ok) o.detail = "300 graphs, k in {1,2}, equivalence holds throughout";
  return o;
}

// ---------------------------------------------------------------- AC8

Outcome reduction_identities() {
  Outcome o;
  std::size_t cells = 0;
  for (int d = 2; d <= 20; ++d) {
    for (int k = 2; 2 * k <= d; ++k) {
      for (double a : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
        if (tau_threshold(d, k, 3, a) != (a + 1) * d - (2.0 * k - 1) / (d + 1)) {
          o.fail("tau threshold at girth 3 differs for d=" + std::to_string(d) + " k=" + std::to_string(k));
        }
        ++cells;
      }
    }
  }

  std::vector<Graph> bipartite{complete_bipartite(3, 3), complete_bipartite(4, 6), complete_bipartite(5, 5), cycle(6),
                               cycle(10), heawood(), tutte_coxeter(), circulant(12, {1, 3, 5})};
  for (const Graph& g : bipartite) {
    GraphAnalysis ctx(g);
    const int delta = ctx.degrees().min_degree;
    for (int k = 2; k <= delta; ++k) {
      const Verdict v = check_co3_5(ctx, k);
      if (!v.applicable || !v.threshold || *v.threshold != kappa_threshold_weak(delta, k, 4, 0.0)) {
        o.fail("bipartite threshold differs from the girth-4 weak threshold on " + to_graph6(g));
      }
    }
  }

  Engine rng(derive_seed(8, 0));
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_gnp(draw(rng, 2, 20), oracle::uniform01(rng), rng);
    const int n = g.order();
    const double b = -(0.25 + 2.0 * oracle::uniform01(rng));
    const double a = -b * oracle::uniform01(rng);
    const auto flipped = spectrum(g, MatrixKind(a, b)).values;
    const auto base = spectrum(g, MatrixKind(a / b, 1.0)).values;
    for (int i = 0; i < n; ++i) {
      if (!close(flipped[n - 1 - i], b * base[i], 1e-8)) o.fail("index flip fails on " + to_graph6(g));
    }
  }
  if (o.ok) o.detail = count_note(cells, "threshold cells exact, bipartite threshold matches, 50 index flips hold");
  return o;
}

// ---------------------------------------------------------------- AC9

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism_and_formats() {
  Outcome o;
  Engine rng(derive_seed(9, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_gnp(draw(rng, 0, 30), oracle::uniform01(rng), rng);
    const std::string s = to_graph6(g);
    if (!(parse_graph6(s) == g) || to_graph6(parse_graph6(s)) != s) o.fail("graph6 round trip fails for " + s);
  }

  const fs::path dir = fs::temp_directory_path() / "spectre_acceptance";
  fs::create_directories(dir);
  const std::string bin = SPECTRE_BINARY;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "analyze random_regular:n=50,d=6,seed=42 --k 2 3 --a 0 1 -1 --out "},
      {"verify", "verify --family random_regular --n 30..60 --d 6 --k 2 --theorem MAIN2 --trials 50 --seed 7 --out " +
                     (dir / "verify.csv").string() + " --json "},
      {"oracle", "oracle-test --trials 25 --seed 5 --json "},
  };
  for (const auto& [name, args] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path file = dir / (name + std::to_string(run) + ".json");
      const std::string cmd = "\"" + bin + "\" " + args + "\"" + file.string() + "\" > /dev/null";
      if (std::system(cmd.c_str()) != 0) o.fail(name + ": command failed");
      outputs[run] = slurp(file);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) o.fail(name + ": repeated runs differ");
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = "200 graph6 round trips, analyze/verify/oracle-test JSON byte-identical across runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 formula fixtures", formula_fixtures},
      {"AC2 eigensolver accuracy", eigensolver_accuracy},
      {"AC3 tau oracle equivalence", tau_oracle_equivalence},
      {"AC4 kappa oracle equivalence", kappa_oracle_equivalence},
      {"AC5 theorem soundness sweeps", theorem_soundness},
      {"AC6 lemma suites", lemma_suites},
      {"AC7 deletion equivalence", deletion_equivalence},
      {"AC8 reduction identities", reduction_identities},
      {"AC9 determinism and formats", determinism_and_formats},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
