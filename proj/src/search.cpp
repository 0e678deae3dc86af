#include "spectre/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "spectre/bounds.hpp"
#include "spectre/errors.hpp"
#include "spectre/generators.hpp"
#include "spectre/rng.hpp"

namespace spectre {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

TrialRecord evaluate_instance(const Graph& g, std::string spec, TheoremId theorem, const CheckParams& params) {
  GraphAnalysis ctx(g);
  TrialRecord rec;
  rec.spec = std::move(spec);
  rec.graph6 = to_graph6(g);
  rec.n = g.order();
  rec.m = g.size();
  rec.min_degree = g.order() > 0 ? ctx.degrees().min_degree : 0;
  rec.girth = ctx.girth();
  if (rec.girth.finite() && rec.min_degree >= 2) rec.n1_star = n1_star(rec.min_degree, rec.girth);
  rec.verdict = check(ctx, theorem, params);
  return rec;
}

void summarize(SearchReport& report, std::vector<TrialRecord> records) {
  for (auto& rec : records) {
    ++report.trials;
    const Verdict& v = rec.verdict;
    if (!v.applicable) {
      ++report.inapplicable;
    } else if (!v.hypothesis_holds) {
      ++report.hypothesis_false;
    } else if (!v.conclusion_verified) {
      ++report.unverified;
    } else if (*v.conclusion_verified) {
      ++report.sound;
    }
    if (v.applicable && v.margin) {
      report.min_margin = report.min_margin ? std::min(*report.min_margin, *v.margin) : *v.margin;
      if (std::abs(*v.margin) < report.config.near_boundary) report.near_boundary.push_back(rec);
    }
    if (!v.sound()) report.unsound.push_back(rec);
    report.records.push_back(std::move(rec));
  }
}

SearchReport counterexample_search(const SearchConfig& config) {
  const bool regular = config.family == "random_regular";
  if (!regular && config.family != "random_min_degree") {
    throw ParseError("search family must be random_regular or random_min_degree, got '" + config.family + "'");
  }
  SearchReport report;
  report.config = config;
  if (config.trials == 0) return report;

  std::vector<int> orders;
  for (int n = std::max(config.n_min, 1); n <= config.n_max; ++n) {
    if (config.degree < 0 || config.degree >= n) continue;
    if (regular && (static_cast<long long>(n) * config.degree) % 2 != 0) continue;
    orders.push_back(n);
  }
  if (orders.empty()) throw DomainError("search: no admissible order in the requested range");

  std::vector<TrialRecord> records(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(config.master_seed, i);
    Engine rng(trial_seed);
    const int n = orders[uniform_below(rng, orders.size())];
    const std::uint64_t graph_seed = rng();
    GeneratorSpec spec;
    spec.family = config.family;
    spec.params["n"] = std::to_string(n);
    spec.params[regular ? "d" : "delta"] = std::to_string(config.degree);
    spec.params["seed"] = std::to_string(graph_seed);
    CheckParams params = config.params;
    params.lemma_seed = derive_seed(trial_seed, 1);
    records[i] = evaluate_instance(generate(spec), spec.to_string(), config.theorem, params);
    records[i].index = i;
    records[i].seed = graph_seed;
  });
  summarize(report, std::move(records));
  return report;
}

}  // namespace spectre
