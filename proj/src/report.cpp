#include "spectre/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "spectre/bounds.hpp"
#include "spectre/errors.hpp"

namespace spectre {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json girth_json(Girth g) { return g.finite() ? Json(g.value()) : Json("infinite"); }

std::string kind_name(double a, double b) {
  if (a == 0.0 && b == 1.0) return "adjacency";
  if (a == 1.0 && b == -1.0) return "laplacian";
  if (a == 1.0 && b == 1.0) return "signless_laplacian";
  return "aD+A";
}

Json vertex_set_json(const VertexSet& s) { return Json(s.members()); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

template <class F>
void try_threshold(std::optional<double>& value, std::string& reason, F&& f) {
  try {
    value = f();
  } catch (const NotApplicable& e) {
    reason = e.what();
  } catch (const DomainError& e) {
    reason = e.what();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_double(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool Report::all_sound() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.sound(); });
}

bool Report::consistent() const {
  if (edge_connectivity && n >= 2 && static_cast<int>(*edge_connectivity) > degrees.min_degree) return false;
  if (tau && n >= 2 && static_cast<std::size_t>(*tau) > m / static_cast<std::size_t>(n - 1)) return false;
  if (tau && edge_connectivity && static_cast<std::size_t>(*tau) > *edge_connectivity) return false;
  return true;
}

Report build_report(const Graph& g, const AnalyzeOptions& options) {
  GraphAnalysis ctx(g);
  Report r;
  r.input_source = options.input_source;
  r.seed = options.seed;
  r.n = g.order();
  r.m = g.size();
  if (r.n < 1) throw DomainError("analyze: empty graph");
  r.degrees = ctx.degrees();
  r.girth = ctx.girth();
  r.bipartite = ctx.bipartite();
  r.connected = ctx.connected();
  r.spectrum_mode = options.spectrum;

  std::vector<std::pair<double, double>> kinds{{0.0, 1.0}, {1.0, -1.0}, {1.0, 1.0}};
  for (double a : options.as) {
    if (std::find(kinds.begin(), kinds.end(), std::pair{a, 1.0}) == kinds.end()) kinds.emplace_back(a, 1.0);
  }
  for (auto [a, b] : kinds) {
    const MatrixKind kind(a, b);
    r.spectra.push_back({kind_name(a, b), a, b, ctx.spectrum(kind)});
  }

  const int delta = r.degrees.min_degree;
  if (delta >= 2 && r.girth.finite()) {
    r.n1_star = n1_star(delta, r.girth);
    r.moore_bound = moore_bound(delta, r.girth);
  }
  for (int k : options.ks) {
    for (double a : options.as) {
      ThresholdRow row;
      row.k = k;
      row.a = a;
      try_threshold(row.tau, row.tau_reason, [&] { return tau_threshold(delta, k, r.girth, a); });
      try_threshold(row.kappa_weak, row.kappa_weak_reason,
                    [&] { return kappa_threshold_weak(delta, k, r.girth, a); });
      try_threshold(row.kappa_strong, row.kappa_strong_reason,
                    [&] { return kappa_threshold_strong(delta, k, r.girth, a, r.n); });
      r.thresholds.push_back(std::move(row));
    }
  }

  const bool exact_forced = options.exact.value_or(false);
  const bool exact_off = options.exact.has_value() && !*options.exact;
  if (!exact_off && r.n >= 2) {
    r.edge_connectivity = ctx.edge_connectivity();
    if (exact_forced || r.n <= kDefaultExactMaxOrder) r.tau = ctx.tau();
  }

  CheckParams params;
  params.options.exact = options.exact;
  for (int k : options.ks) {
    params.k = k;
    for (double a : options.as) {
      params.a = a;
      for (TheoremId id : {TheoremId::Main1I, TheoremId::Main1II, TheoremId::Main2}) {
        r.verdicts.push_back(check(ctx, id, params));
      }
    }
    params.a = 0.0;
    for (TheoremId id : {TheoremId::Cor2I, TheoremId::Cor2II, TheoremId::Cor2III, TheoremId::Co33I,
                         TheoremId::Co33II, TheoremId::Co33III, TheoremId::Co35}) {
      r.verdicts.push_back(check(ctx, id, params));
    }
  }
  return r;
}

Json to_json(const Spectrum& s) { return Json(s.values); }

Json to_json(const Verdict& v) {
  Json j;
  j["theorem"] = std::string(to_string(v.theorem));
  j["target"] = v.target ? Json(std::string(to_string(*v.target))) : Json(nullptr);
  j["k"] = v.k;
  j["a"] = v.a;
  j["b"] = v.b;
  j["applicable"] = v.applicable;
  j["reason"] = v.reason.empty() ? Json(nullptr) : Json(v.reason);
  j["eigenvalue_label"] = v.eigenvalue_label;
  j["eigenvalue"] = optional_json(v.eigenvalue);
  j["relation"] = v.relation;
  j["threshold"] = optional_json(v.threshold);
  j["hypothesis_holds"] = v.hypothesis_holds;
  j["margin"] = optional_json(v.margin);
  j["conclusion"] = v.conclusion_claim;
  j["conclusion_verified"] = optional_json(v.conclusion_verified);
  Json exact;
  exact["edge_connectivity"] = optional_json(v.exact.edge_connectivity);
  exact["tau"] = optional_json(v.exact.tau);
  exact["tau_at_least_k"] = optional_json(v.exact.tau_at_least_k);
  j["exact"] = std::move(exact);
  j["sound"] = v.sound();
  return j;
}

Json to_json(const TreePacking& p) {
  Json j;
  j["k"] = p.k;
  Json forests = Json::array();
  for (const auto& f : p.forests) forests.push_back(edges_json(f));
  j["forests"] = std::move(forests);
  return j;
}

Json to_json(const PartitionCertificate& c) {
  Json j;
  Json blocks = Json::array();
  for (const auto& b : c.partition.blocks()) blocks.push_back(vertex_set_json(b));
  j["blocks"] = std::move(blocks);
  j["deficiency"] = c.deficiency;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = kSchemaVersion;

  Json graph;
  graph["n"] = r.n;
  graph["m"] = r.m;
  graph["min_degree"] = r.degrees.min_degree;
  graph["max_degree"] = r.degrees.max_degree;
  graph["average_degree"] = r.degrees.average_degree;
  graph["girth"] = girth_json(r.girth);
  graph["bipartite"] = r.bipartite;
  graph["connected"] = r.connected;
  j["graph"] = std::move(graph);

  Json spectra = Json::array();
  if (r.spectrum_mode != SpectrumMode::None) {
    for (const auto& s : r.spectra) {
      Json e;
      e["kind"] = s.name;
      e["a"] = s.a;
      e["b"] = s.b;
      const auto& vals = s.spectrum.values;
      e["lambda_1"] = vals.front();
      e["lambda_2"] = vals.size() >= 2 ? Json(vals[1]) : Json(nullptr);
      e["lambda_n_minus_1"] = vals.size() >= 2 ? Json(vals[vals.size() - 2]) : Json(nullptr);
      e["lambda_n"] = vals.back();
      if (r.spectrum_mode == SpectrumMode::Full) e["values"] = to_json(s.spectrum);
      spectra.push_back(std::move(e));
    }
  }
  j["spectra"] = std::move(spectra);

  Json bounds;
  bounds["n1_star"] = optional_json(r.n1_star);
  bounds["moore_bound"] = optional_json(r.moore_bound);
  Json rows = Json::array();
  for (const auto& t : r.thresholds) {
    Json row;
    row["k"] = t.k;
    row["a"] = t.a;
    row["tau"] = optional_json(t.tau);
    row["kappa_weak"] = optional_json(t.kappa_weak);
    row["kappa_strong"] = optional_json(t.kappa_strong);
    Json reasons;
    if (!t.tau_reason.empty()) reasons["tau"] = t.tau_reason;
    if (!t.kappa_weak_reason.empty()) reasons["kappa_weak"] = t.kappa_weak_reason;
    if (!t.kappa_strong_reason.empty()) reasons["kappa_strong"] = t.kappa_strong_reason;
    row["not_applicable"] = reasons.empty() ? Json::object() : reasons;
    rows.push_back(std::move(row));
  }
  bounds["thresholds"] = std::move(rows);
  j["bounds"] = std::move(bounds);

  Json exact;
  exact["edge_connectivity"] = optional_json(r.edge_connectivity);
  exact["tau"] = optional_json(r.tau);
  j["exact"] = std::move(exact);

  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = std::move(verdicts);

  Json prov;
  prov["input"] = r.input_source;
  prov["seed"] = optional_json(r.seed);
  prov["tool_version"] = kToolVersion;
  j["provenance"] = std::move(prov);
  return j;
}

Json to_json(const TrialRecord& r) {
  Json j;
  j["index"] = r.index;
  j["seed"] = r.seed;
  j["spec"] = r.spec;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["min_degree"] = r.min_degree;
  j["girth"] = girth_json(r.girth);
  j["n1_star"] = optional_json(r.n1_star);
  j["verdict"] = to_json(r.verdict);
  return j;
}

Json to_json(const SearchReport& r, bool include_records) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json cfg;
  cfg["family"] = r.config.family;
  cfg["n_min"] = r.config.n_min;
  cfg["n_max"] = r.config.n_max;
  cfg["degree"] = r.config.degree;
  cfg["theorem"] = std::string(to_string(r.config.theorem));
  cfg["k"] = r.config.params.k;
  cfg["a"] = r.config.params.a;
  cfg["b"] = r.config.params.b;
  cfg["trials"] = r.config.trials;
  cfg["master_seed"] = r.config.master_seed;
  cfg["near_boundary"] = r.config.near_boundary;
  j["config"] = std::move(cfg);
  Json counts;
  counts["trials"] = r.trials;
  counts["inapplicable"] = r.inapplicable;
  counts["hypothesis_false"] = r.hypothesis_false;
  counts["sound"] = r.sound;
  counts["unverified"] = r.unverified;
  counts["unsound"] = r.unsound.size();
  j["counts"] = std::move(counts);
  j["min_margin"] = optional_json(r.min_margin);
  Json near = Json::array();
  for (const auto& rec : r.near_boundary) {
    Json e;
    e["index"] = rec.index;
    e["spec"] = rec.spec;
    e["graph6"] = rec.graph6;
    e["margin"] = optional_json(rec.verdict.margin);
    near.push_back(std::move(e));
  }
  j["near_boundary"] = std::move(near);
  Json unsound = Json::array();
  for (const auto& rec : r.unsound) unsound.push_back(to_json(rec));
  j["unsound"] = std::move(unsound);
  if (include_records) {
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    j["records"] = std::move(records);
  }
  return j;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    const Verdict& v = r.verdict;
    out << csv_field(r.spec) << ',' << r.n << ',' << r.m << ',' << r.min_degree << ',' << r.girth.to_string() << ','
        << (r.n1_star ? std::to_string(*r.n1_star) : std::string()) << ',' << to_string(v.theorem) << ','
        << (v.applicable ? "true" : "false") << ',' << csv_double(v.eigenvalue) << ',' << csv_double(v.threshold)
        << ',' << csv_double(v.margin) << ',' << (v.hypothesis_holds ? "true" : "false") << ','
        << (v.exact.edge_connectivity ? std::to_string(*v.exact.edge_connectivity) : std::string()) << ','
        << (v.exact.tau_at_least_k ? (*v.exact.tau_at_least_k ? "true" : "false") : "") << ','
        << (v.sound() ? "true" : "false") << '\n';
  }
}

}  // namespace spectre
