#include <cmath>

#include "doctest.h"
#include "spectre/connectivity.hpp"
#include "spectre/errors.hpp"
#include "spectre/generators.hpp"
#include "spectre/oracles.hpp"
#include "spectre/report.hpp"
#include "spectre/search.hpp"
#include "spectre/spectral.hpp"
#include "spectre/theorems.hpp"

using namespace spectre;

namespace {

int draw(Engine& rng, int lo, int hi) { return lo + static_cast<int>(uniform_below(rng, hi - lo + 1)); }

Graph random_graph(Engine& rng, int lo, int hi) {
  return oracle::random_gnp(draw(rng, lo, hi), oracle::uniform01(rng), rng);
}

}  // namespace

TEST_CASE("graph6 round trip") {
  Engine rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 0, 30);
    const std::string s = to_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(to_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("edge list round trip") {
  Engine rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 1, 25);
    CHECK(from_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("cut symmetry and partition sums") {
  Engine rng(31);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 2, 14);
    const int n = g.order();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t mask = 1 + uniform_below(rng, full - 1);
    const VertexSet x = VertexSet::from_mask(mask, n);
    const VertexSet rest = VertexSet::from_mask(full & ~mask, n);
    CHECK(boundary(g, x) == boundary(g, rest));
    CHECK(boundary(g, x) == cross_edges(g, x, rest));

    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(uniform_below(rng, 4));
    const Partition p = Partition::from_labels(labels);
    std::size_t crossing = 0;
    for (const Edge& e : g.edges()) crossing += p.labels()[e.u] != p.labels()[e.v];
    CHECK(partition_boundary_sum(g, p) == 2 * crossing);
  }
}

TEST_CASE("girth agrees with cycle enumeration") {
  Engine rng(8);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_gnp(draw(rng, 1, 12), 0.1 + 0.5 * oracle::uniform01(rng), rng);
    const Girth got = girth(g);
    CHECK(got == oracle::girth_by_cycles(g));
    if (got.finite()) {
      CHECK(got.value() >= 3);
      if (is_bipartite(g)) CHECK(got.value() % 2 == 0);
    }
  }
}

TEST_CASE("spectral identities") {
  Engine rng(77);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(rng, 2, 18);
    const int n = g.order();

    // Trace and solver agreement.
    const double a = -1.0 + 3.0 * oracle::uniform01(rng);
    const SymmetricMatrix m = build_matrix(g, MatrixKind::shifted(a));
    const auto values = eigenvalues(m).values;
    double sum = 0.0;
    for (double v : values) sum += v;
    CHECK(std::abs(sum - m.trace()) <= 1e-8 * n * (1.0 + m.norm_inf()));
    const auto jac = oracle::jacobi_eigenvalues(m);
    for (int j = 0; j < n; ++j) CHECK(std::abs(values[j] - jac[j]) <= 1e-9 * (1.0 + m.norm_inf()));

    // Index flip for b < 0: lambda_{n-i+1}(a, b) = b lambda_i(a/b, 1).
    const double b = -(0.5 + 2.0 * oracle::uniform01(rng));
    const double a2 = -b * oracle::uniform01(rng);  // a/b in [-1, 0]
    const auto neg = spectrum(g, MatrixKind(a2, b)).values;
    const auto pos = spectrum(g, MatrixKind(a2 / b, 1.0)).values;
    for (int j = 0; j < n; ++j) CHECK(std::abs(neg[n - 1 - j] - b * pos[j]) <= 1e-8 * (1.0 + std::abs(b) * n));
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int d = 3 + static_cast<int>(s % 4);
    const Graph g = random_regular(24, d, s);
    const auto base = spectrum(g, MatrixKind::adjacency()).values;
    for (double a : {-1.0, 0.5, 2.0}) {
      const auto shifted = spectrum(g, MatrixKind::shifted(a)).values;
      for (std::size_t j = 0; j < base.size(); ++j) CHECK(std::abs(shifted[j] - (a * d + base[j])) <= 1e-8);
    }
  }
}

TEST_CASE("interlacing sweeps") {
  Engine rng(404);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 3, 14);
    const int n = g.order();
    const SymmetricMatrix m = build_matrix(g, MatrixKind::adjacency());
    std::vector<std::size_t> keep;
    for (int v = 0; v < n; ++v)
      if (uniform_below(rng, 2)) keep.push_back(v);
    if (keep.empty() || static_cast<int>(keep.size()) == n) keep = {static_cast<std::size_t>(n - 1)};
    CHECK(check_interlacing(eigenvalues(m).values, eigenvalues(m.principal_submatrix(keep)).values).holds);
  }
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 3, 14);
    const int n = g.order();
    std::vector<int> labels(n);
    const int blocks = draw(rng, 1, n - 1);
    for (auto& l : labels) l = static_cast<int>(uniform_below(rng, blocks));
    const Partition p = Partition::from_labels(labels);
    for (double a : {0.0, 1.0, -1.0}) {
      const SymmetricMatrix m = build_matrix(g, MatrixKind::shifted(a));
      const Interlacing r = check_interlacing(eigenvalues(m).values, quotient_eigenvalues(quotient_matrix(m, p)));
      CHECK(r.holds);
    }
  }
}

TEST_CASE("oracle equivalences") {
  Engine rng(123);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_connected_gnp(draw(rng, 2, 8), 0.3 + 0.6 * oracle::uniform01(rng), rng);
    for (int k = 1; k <= 3; ++k) {
      const TauDecision d = tau_at_least(g, k);
      CHECK(d.answer == nash_williams_oracle(g, k).holds);
      if (d.answer) {
        CHECK(verify_tree_packing(g, std::get<TreePacking>(d.evidence), true));
      } else {
        CHECK(verify_certificate(g, std::get<PartitionCertificate>(d.evidence), k));
      }
    }
  }
  // Above the oracle guard the augmentation must still produce checkable evidence.
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_connected_gnp(draw(rng, 13, 24), 0.2 + 0.5 * oracle::uniform01(rng), rng);
    for (int k = 1; k <= 4; ++k) {
      const TauDecision d = tau_at_least(g, k, {false});
      if (d.answer) {
        CHECK(verify_tree_packing(g, std::get<TreePacking>(d.evidence), true));
      } else {
        CHECK(verify_certificate(g, std::get<PartitionCertificate>(d.evidence), k));
      }
    }
  }
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(rng, 2, 12);
    CHECK(edge_connectivity(g).value == brute_force_edge_connectivity(g));
  }
}

TEST_CASE("lemma checks on small graphs") {
  Engine rng(9);
  int checked = 0;
  while (checked < 100) {
    const Graph g = oracle::random_gnp(draw(rng, 3, 12), 0.3 + 0.6 * oracle::uniform01(rng), rng);
    if (degree_stats(g).min_degree < 2) continue;
    const Lemma31Result r = check_lemma3_1(g);
    CHECK(r.applicable);
    CHECK(r.holds);
    ++checked;
  }
}

TEST_CASE("sweeps are deterministic and independent of thread count") {
  SearchConfig cfg;
  cfg.family = "random_regular";
  cfg.n_min = 12;
  cfg.n_max = 20;
  cfg.degree = 4;
  cfg.theorem = TheoremId::Main2;
  cfg.trials = 24;
  cfg.master_seed = 99;
  const std::string one = to_json(counterexample_search(cfg), true).dump();
  CHECK(to_json(counterexample_search(cfg), true).dump() == one);
  cfg.threads = 4;
  CHECK(to_json(counterexample_search(cfg), true).dump() == one);

  const SearchReport r = counterexample_search(cfg);
  CHECK(r.trials == 24);
  CHECK(r.inapplicable + r.hypothesis_false + r.sound + r.unverified + r.unsound.size() == 24);
  CHECK(r.unsound.empty());
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    CHECK(r.records[i].index == i);
    CHECK(parse_graph6(r.records[i].graph6) == generate(GeneratorSpec::parse(r.records[i].spec)));
  }

  cfg.trials = 0;
  const SearchReport empty = counterexample_search(cfg);
  CHECK(empty.trials == 0);
  CHECK(empty.records.empty());
  CHECK_FALSE(empty.min_margin);

  cfg.trials = 3;
  cfg.family = "cycle";
  CHECK_THROWS_AS(counterexample_search(cfg), ParseError);
}

TEST_CASE("number formatting round-trips") {
  Engine rng(3);
  for (int i = 0; i < 500; ++i) {
    const double x = (oracle::uniform01(rng) - 0.5) * std::pow(10.0, draw(rng, -10, 10));
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(2.75) == "2.75");
}
