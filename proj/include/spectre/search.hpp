#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectre/theorems.hpp"

namespace spectre {

/// Random sweep over a graph family, checking one theorem per instance.
struct SearchConfig {
  std::string family = "random_regular";  ///< random_regular or random_min_degree
  int n_min = 10;
  int n_max = 10;
  int degree = 3;  ///< d for random_regular, delta for random_min_degree
  TheoremId theorem = TheoremId::Main2;
  CheckParams params;
  std::size_t trials = 0;
  std::uint64_t master_seed = 0;
  double near_boundary = 0.05;  ///< reporting only; never changes a verdict
  unsigned threads = 1;         ///< 0 = hardware concurrency
};

/// One evaluated instance.
struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;  ///< generator seed of this instance
  std::string spec;        ///< generator spec string reproducing the graph
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  int min_degree = 0;
  Girth girth;
  std::optional<std::uint64_t> n1_star;
  Verdict verdict;
};

struct SearchReport {
  SearchConfig config;
  std::size_t trials = 0;
  std::size_t inapplicable = 0;
  std::size_t hypothesis_false = 0;
  std::size_t sound = 0;       ///< hypothesis held and the conclusion was verified
  std::size_t unverified = 0;  ///< hypothesis held, exact check skipped
  std::optional<double> min_margin;
  std::vector<TrialRecord> near_boundary;
  /// Hypothesis held but the conclusion failed. Must stay empty.
  std::vector<TrialRecord> unsound;
  std::vector<TrialRecord> records;  ///< every trial, ordered by index
};

/// Graph-level summary shared by sweeps and the CLI.
TrialRecord evaluate_instance(const Graph& g, std::string spec, TheoremId theorem, const CheckParams& params);

/// Generates `trials` graphs (trial i seeded by derive_seed(master_seed, i)),
/// checks each, and aggregates in trial order. Throws ParseError/DomainError on
/// an invalid configuration.
SearchReport counterexample_search(const SearchConfig& config);

/// Folds already evaluated records into the report counters.
void summarize(SearchReport& report, std::vector<TrialRecord> records);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware concurrency).
/// The first exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace spectre
