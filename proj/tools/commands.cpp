#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "spectre/errors.hpp"
#include "spectre/generators.hpp"
#include "spectre/report.hpp"
#include "spectre/rng.hpp"
#include "spectre/search.hpp"

namespace spectre::cli {

namespace {

bool looks_like_graph6(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with(">>graph6<<")) return true;
    return std::all_of(line.begin(), line.end(), [](char c) { return c >= 63 && c <= 126; });
  }
  return false;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw ParseError("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("--n expects N or LO..HI, got '" + text + "'");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

TheoremId theorem_from(const std::string& name) {
  auto id = parse_theorem_id(name);
  if (!id) throw ParseError("unknown theorem '" + name + "'");
  return *id;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "' for writing");
  file << text;
}

struct AnalyzeArgs {
  std::string input;
  std::vector<int> ks{2};
  std::vector<double> as{0.0};
  bool exact = false;
  bool no_exact = false;
  std::string spectrum = "summary";
  std::string out;
};

int do_analyze(const AnalyzeArgs& args, std::ostream& out) {
  LoadedGraph loaded = load_input(args.input);
  AnalyzeOptions opt;
  opt.ks = args.ks;
  opt.as = args.as;
  if (args.exact) opt.exact = true;
  if (args.no_exact) opt.exact = false;
  opt.spectrum = args.spectrum == "full"   ? SpectrumMode::Full
                 : args.spectrum == "none" ? SpectrumMode::None
                                           : SpectrumMode::Summary;
  opt.input_source = loaded.source;
  opt.seed = loaded.seed;
  const Report report = build_report(loaded.graph, opt);
  write_text(args.out, to_json(report).dump(2) + "\n", out);
  return report.all_sound() && report.consistent() ? kExitOk : kExitUnsound;
}

struct VerifyArgs {
  std::string family = "cages";
  std::string n_range = "10..30";
  int degree = 3;
  std::string theorem = "MAIN2";
  int k = 2;
  double a = 0.0;
  double b = 1.0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double near_boundary = 0.05;
  std::string out;
  std::string json;
  std::string exact = "auto";
};

int do_verify(const VerifyArgs& args, std::ostream& out) {
  SearchConfig cfg;
  cfg.family = args.family;
  cfg.degree = args.degree;
  cfg.theorem = theorem_from(args.theorem);
  cfg.params.k = args.k;
  cfg.params.a = args.a;
  cfg.params.b = args.b;
  if (args.exact == "on") cfg.params.options.exact = true;
  if (args.exact == "off") cfg.params.options.exact = false;
  cfg.trials = args.trials;
  cfg.master_seed = args.seed;
  cfg.near_boundary = args.near_boundary;
  cfg.threads = thread_count();
  std::tie(cfg.n_min, cfg.n_max) = parse_range(args.n_range);

  SearchReport report;
  report.config = cfg;
  if (cfg.family == "random_regular" || cfg.family == "random_min_degree") {
    if (cfg.n_min <= cfg.n_max && cfg.trials > 0) report = counterexample_search(cfg);
  } else {
    std::vector<std::pair<Graph, std::string>> graphs;
    if (cfg.family == "cages") {
      for (const char* name : {"petersen", "heawood", "mcgee", "tutte_coxeter"}) {
        graphs.emplace_back(generate(GeneratorSpec::parse(name)), name);
      }
    } else if (cfg.family == "complete" || cfg.family == "cycle" || cfg.family == "path") {
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        GeneratorSpec spec;
        spec.family = cfg.family;
        spec.params["n"] = std::to_string(n);
        graphs.emplace_back(generate(spec), spec.to_string());
      }
    } else {
      throw ParseError("verify: unsupported family '" + cfg.family + "'");
    }
    std::vector<TrialRecord> records(graphs.size());
    parallel_for(graphs.size(), cfg.threads, [&](std::size_t i) {
      CheckParams params = cfg.params;
      params.lemma_seed = derive_seed(cfg.master_seed, i);
      records[i] = evaluate_instance(graphs[i].first, graphs[i].second, cfg.theorem, params);
      records[i].index = i;
    });
    summarize(report, std::move(records));
  }

  std::ostringstream csv;
  write_csv(csv, report.records);
  write_text(args.out, csv.str(), out);
  if (!args.json.empty()) write_text(args.json, to_json(report, true).dump(2) + "\n", out);
  return report.unsound.empty() ? kExitOk : kExitUnsound;
}

struct OracleArgs {
  std::vector<std::string> suites;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  bool inject_fault = false;
  std::string json;
};

int do_oracle_test(const OracleArgs& args, std::ostream& out) {
  std::vector<std::string> names = args.suites;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = suite_names();
  for (const auto& name : names) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw ParseError("unknown oracle suite '" + name + "'");
    }
  }
  bool ok = true;
  Json summary = Json::array();
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, args.trials, args.seed, args.inject_fault);
    ok = ok && r.ok();
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.trials << " trials agree\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
    Json j;
    j["suite"] = r.name;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    j["failures"] = r.failures;
    summary.push_back(std::move(j));
  }
  if (!args.json.empty()) {
    std::ostringstream sink;
    write_text(args.json, summary.dump(2) + "\n", sink);
  }
  return ok ? kExitOk : kExitUnsound;
}

}  // namespace

unsigned thread_count() {
  const char* env = std::getenv("SPECTRE_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 1024) return 0;
  return static_cast<unsigned>(v);
}

LoadedGraph load_input(const std::string& input) {
  namespace fs = std::filesystem;
  LoadedGraph loaded;
  loaded.source = input;
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) {
    std::ifstream file(input, std::ios::binary);
    if (!file) throw ParseError("cannot read '" + input + "'");
    const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    const bool g6 = fs::path(input).extension() == ".g6" || looks_like_graph6(text);
    loaded.graph = g6 ? parse_graph6(text) : from_edge_list(text);
    return loaded;
  }
  const GeneratorSpec spec = GeneratorSpec::parse(input);
  const auto& families = generator_families();
  if (std::find(families.begin(), families.end(), spec.family) == families.end()) {
    throw ParseError("'" + input + "' is neither a readable file nor a generator spec");
  }
  loaded.graph = generate(spec);
  loaded.source = spec.to_string();
  if (auto it = spec.params.find("seed"); it != spec.params.end()) {
    loaded.seed = std::stoull(it->second);
  } else if (spec.family.starts_with("random_")) {
    loaded.seed = 0;
  }
  return loaded;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral edge-connectivity and tree-packing analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Report spectra, bounds, exact values and verdicts for one graph");
  an->add_option("input", analyze.input, "Graph file (edge list or graph6) or generator spec")->required();
  an->add_option("--k", analyze.ks, "Target values of k")->expected(1, -1);
  an->add_option("--a", analyze.as, "Values of a for aD + A")->expected(1, -1);
  auto* exact_flag = an->add_flag("--exact", analyze.exact, "Verify every conclusion and compute tau at any order");
  an->add_flag("--no-exact", analyze.no_exact, "Skip exact computations")->excludes(exact_flag);
  an->add_option("--spectrum", analyze.spectrum, "none, summary or full")
      ->check(CLI::IsMember({"none", "summary", "full"}));
  an->add_option("--out", analyze.out, "Write the JSON report here instead of stdout");

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "Check one theorem across a graph family and emit CSV");
  ve->add_option("--family", verify.family,
                 "cages, complete, cycle, path, random_regular or random_min_degree");
  ve->add_option("--n", verify.n_range, "Order N or range LO..HI");
  ve->add_option("--d,--degree", verify.degree, "Degree d (random_regular) or minimum degree (random_min_degree)");
  ve->add_option("--theorem", verify.theorem, "Theorem id, e.g. MAIN2 or COR2_II");
  ve->add_option("--k", verify.k, "Target k");
  ve->add_option("--a", verify.a, "Coefficient a of aD + bA");
  ve->add_option("--b", verify.b, "Coefficient b of aD + bA (CO3_2_* and TH4_3_* only)");
  ve->add_option("--trials", verify.trials, "Number of random instances");
  ve->add_option("--seed", verify.seed, "Master seed");
  ve->add_option("--near-boundary", verify.near_boundary, "Margin below which instances are flagged");
  ve->add_option("--exact", verify.exact, "auto, on or off")->check(CLI::IsMember({"auto", "on", "off"}));
  ve->add_option("--out", verify.out, "Write CSV here instead of stdout");
  ve->add_option("--json", verify.json, "Also write a JSON report with every record");

  OracleArgs oracle;
  auto* ot = app.add_subcommand("oracle-test", "Cross-check implementations against brute-force oracles");
  ot->add_option("--suite", oracle.suites, "Suite name or 'all' (repeatable)");
  ot->add_option("--trials", oracle.trials, "Trials per suite");
  ot->add_option("--seed", oracle.seed, "Master seed");
  ot->add_option("--json", oracle.json, "Write a JSON summary here");
  ot->add_flag("--inject-fault", oracle.inject_fault)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (an->parsed()) return do_analyze(analyze, out);
    if (ve->parsed()) return do_verify(verify, out);
    return do_oracle_test(oracle, out);
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "invalid graph: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace spectre::cli
