#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectre/connectivity.hpp"
#include "spectre/search.hpp"
#include "spectre/spectral.hpp"
#include "spectre/theorems.hpp"

namespace spectre {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "spectre-pack/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class SpectrumMode { None, Summary, Full };

struct AnalyzeOptions {
  std::vector<int> ks{2};
  std::vector<double> as{0.0};
  SpectrumMode spectrum = SpectrumMode::Summary;
  /// true: verify every verdict and compute tau at any order; false: no exact work;
  /// unset: kappa' always, tau and verdict verification only for n <= 200.
  std::optional<bool> exact;
  std::string input_source;
  std::optional<std::uint64_t> seed;
};

struct KindSummary {
  std::string name;
  double a = 0.0;
  double b = 1.0;
  Spectrum spectrum;
};

struct ThresholdRow {
  int k = 0;
  double a = 0.0;
  std::optional<double> tau;
  std::optional<double> kappa_weak;
  std::optional<double> kappa_strong;
  std::string tau_reason;
  std::string kappa_weak_reason;
  std::string kappa_strong_reason;
};

/// Everything `analyze` reports for one graph.
struct Report {
  std::string input_source;
  std::optional<std::uint64_t> seed;
  int n = 0;
  std::size_t m = 0;
  DegreeStats degrees;
  Girth girth;
  bool bipartite = false;
  bool connected = false;
  std::vector<KindSummary> spectra;
  SpectrumMode spectrum_mode = SpectrumMode::Summary;
  std::optional<std::uint64_t> n1_star;
  std::optional<std::uint64_t> moore_bound;
  std::vector<ThresholdRow> thresholds;
  std::optional<std::size_t> edge_connectivity;
  std::optional<int> tau;
  std::vector<Verdict> verdicts;

  bool all_sound() const;
  /// kappa' <= delta and tau <= floor(m/(n-1)) whenever computed.
  bool consistent() const;
};

Report build_report(const Graph& g, const AnalyzeOptions& options);

Json to_json(const Report& report);
Json to_json(const Verdict& v);
Json to_json(const Spectrum& s);
Json to_json(const TreePacking& p);
Json to_json(const PartitionCertificate& c);
Json to_json(const TrialRecord& r);
Json to_json(const SearchReport& r, bool include_records);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// CSV with one row per record, quoted where needed.
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);
inline constexpr const char* kCsvHeader =
    "spec,n,m,delta,girth,n1_star,theorem,applicable,eigenvalue,threshold,margin,hypothesis,kappa_prime,"
    "tau_at_least_k,sound";

}  // namespace spectre
