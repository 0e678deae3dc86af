#include "spectre/generators.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

#include "spectre/errors.hpp"
#include "spectre/rng.hpp"

namespace spectre {

namespace detail {
extern const std::string_view kPetersenEdges;
extern const std::string_view kHeawoodEdges;
extern const std::string_view kMcGeeEdges;
extern const std::string_view kTutteCoxeterEdges;
}  // namespace detail

Graph complete(int n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int left, int right) {
  if (left < 1 || right < 1) throw DomainError("complete bipartite graph needs both sides >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u) {
    for (int v = 0; v < right; ++v) edges.emplace_back(u, left + v);
  }
  return Graph::from_edges(left + right, edges);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph circulant(int n, const std::vector<int>& offsets) {
  if (n < 1) throw DomainError("circulant needs n >= 1");
  std::vector<int> s(offsets);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<Edge> edges;
  for (int off : s) {
    if (off < 1 || 2 * off > n) throw DomainError("circulant offset " + std::to_string(off) + " outside [1, n/2]");
    for (int v = 0; v < n; ++v) {
      const int w = (v + off) % n;
      // Offset n/2 pairs each vertex once.
      if (2 * off == n && v >= w) continue;
      edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

Graph load_cage(std::string_view name, std::string_view text, int degree, int expected_girth) {
  Graph g = from_edge_list(text);
  const auto stats = degree_stats(g);
  if (stats.min_degree != degree || stats.max_degree != degree || girth(g) != Girth(expected_girth)) {
    throw std::logic_error("bundled cage '" + std::string(name) + "' failed its regularity/girth check");
  }
  return g;
}

}  // namespace

Graph petersen() {
  static const Graph g = load_cage("petersen", detail::kPetersenEdges, 3, 5);
  return g;
}

Graph heawood() {
  static const Graph g = load_cage("heawood", detail::kHeawoodEdges, 3, 6);
  return g;
}

Graph mcgee() {
  static const Graph g = load_cage("mcgee", detail::kMcGeeEdges, 3, 7);
  return g;
}

Graph tutte_coxeter() {
  static const Graph g = load_cage("tutte_coxeter", detail::kTutteCoxeterEdges, 3, 8);
  return g;
}

namespace {

constexpr int kMaxRestarts = 1000;
constexpr int kQuickDraws = 64;

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v);
}

Graph random_regular_with(int n, int d, Engine& rng) {
  if (n < 1 || d < 0 || d >= n) throw DomainError("random_regular needs 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw DomainError("random_regular needs n*d even");

  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(d), v);
    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);

    auto take = [&](std::size_t i, std::size_t j) {
      const int u = stubs[i];
      const int v = stubs[j];
      present.insert(edge_key(u, v));
      edges.emplace_back(u, v);
      // Remove the higher index first so the lower stays valid.
      for (std::size_t idx : {std::max(i, j), std::min(i, j)}) {
        stubs[idx] = stubs.back();
        stubs.pop_back();
      }
    };
    auto admissible = [&](std::size_t i, std::size_t j) {
      return i != j && stubs[i] != stubs[j] && !present.count(edge_key(stubs[i], stubs[j]));
    };

    bool stuck = false;
    while (!stubs.empty()) {
      bool placed = false;
      for (int draw = 0; draw < kQuickDraws && !placed; ++draw) {
        const auto i = static_cast<std::size_t>(uniform_below(rng, stubs.size()));
        const auto j = static_cast<std::size_t>(uniform_below(rng, stubs.size()));
        if (admissible(i, j)) {
          take(i, j);
          placed = true;
        }
      }
      if (placed) continue;
      // Few stubs left: choose among the admissible pairs explicitly.
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t i = 0; i < stubs.size(); ++i) {
        for (std::size_t j = i + 1; j < stubs.size(); ++j) {
          if (admissible(i, j)) options.emplace_back(i, j);
        }
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      auto [i, j] = options[uniform_below(rng, options.size())];
      take(i, j);
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw DomainError("random_regular: exceeded " + std::to_string(kMaxRestarts) + " restarts");
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
  Engine rng(seed);
  return random_regular_with(n, d, rng);
}

Graph random_min_degree(int n, int delta, std::uint64_t seed) {
  if (n < 1 || delta < 0 || delta >= n) throw DomainError("random_min_degree needs 0 <= delta < n");
  Engine rng(seed);
  // n*delta odd forces n odd and delta <= n-2, so delta+1 < n.
  const int base = (static_cast<long long>(n) * delta) % 2 == 0 ? delta : delta + 1;
  Graph g = random_regular_with(n, base, rng);
  auto edges = g.edges();
  std::unordered_set<std::uint64_t> present;
  for (const Edge& e : edges) present.insert(edge_key(e.u, e.v));
  const auto full = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  auto extra = uniform_below(rng, static_cast<std::uint64_t>(n) + 1);
  while (extra > 0 && edges.size() < full) {
    const auto u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    const auto v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (u == v || present.count(edge_key(u, v))) continue;
    present.insert(edge_key(u, v));
    edges.emplace_back(u, v);
    --extra;
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------- specs

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(const GeneratorSpec& spec, std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("generator '" + spec.family + "': bad value '" + std::string(value) + "' for " +
                     std::string(key));
  }
  return out;
}

class ParamReader {
 public:
  explicit ParamReader(const GeneratorSpec& spec) : spec_(spec) {}

  int integer(const std::string& key) { return parse_number<int>(spec_, key, raw(key)); }

  std::uint64_t seed() {
    auto it = spec_.params.find("seed");
    used_.push_back("seed");
    return it == spec_.params.end() ? 0 : parse_number<std::uint64_t>(spec_, "seed", it->second);
  }

  std::vector<int> integer_list(const std::string& key) {
    std::vector<int> out;
    std::string_view text = raw(key);
    while (!text.empty()) {
      auto slash = text.find('/');
      out.push_back(parse_number<int>(spec_, key, text.substr(0, slash)));
      if (slash == std::string_view::npos) break;
      text.remove_prefix(slash + 1);
    }
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : spec_.params) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw ParseError("generator '" + spec_.family + "': unknown parameter '" + key + "'");
      }
    }
  }

 private:
  std::string_view raw(const std::string& key) {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw ParseError("generator '" + spec_.family + "': missing parameter '" + key + "'");
    used_.push_back(key);
    return it->second;
  }

  const GeneratorSpec& spec_;
  std::vector<std::string> used_;
};

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  text = strip(text);
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = std::string(strip(text.substr(0, colon)));
  if (spec.family.empty()) throw ParseError("generator spec has no family name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = strip(rest.substr(0, comma));
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("generator spec: expected key=value, got '" + std::string(item) + "'");
    }
    std::string key(strip(item.substr(0, eq)));
    if (!spec.params.emplace(key, std::string(strip(item.substr(eq + 1)))).second) {
      throw ParseError("generator spec: repeated parameter '" + key + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

std::string GeneratorSpec::to_string() const {
  std::string out = family;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep;
    out += key;
    out += '=';
    out += value;
    sep = ',';
  }
  return out;
}

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> names = {
      "complete", "complete_bipartite", "cycle",         "path",     "petersen",        "heawood",
      "mcgee",    "tutte_coxeter",      "circulant",     "random_regular", "random_min_degree"};
  return names;
}

Graph generate(const GeneratorSpec& spec) {
  ParamReader p(spec);
  Graph g;
  const std::string& f = spec.family;
  if (f == "complete") {
    g = complete(p.integer("n"));
  } else if (f == "complete_bipartite") {
    g = complete_bipartite(p.integer("a"), p.integer("b"));
  } else if (f == "cycle") {
    g = cycle(p.integer("n"));
  } else if (f == "path") {
    g = path(p.integer("n"));
  } else if (f == "petersen") {
    g = petersen();
  } else if (f == "heawood") {
    g = heawood();
  } else if (f == "mcgee") {
    g = mcgee();
  } else if (f == "tutte_coxeter") {
    g = tutte_coxeter();
  } else if (f == "circulant") {
    const int n = p.integer("n");
    g = circulant(n, p.integer_list("s"));
  } else if (f == "random_regular") {
    const int n = p.integer("n");
    const int d = p.integer("d");
    g = random_regular(n, d, p.seed());
  } else if (f == "random_min_degree") {
    const int n = p.integer("n");
    const int delta = p.integer("delta");
    g = random_min_degree(n, delta, p.seed());
  } else {
    throw ParseError("unknown generator family '" + f + "'");
  }
  p.finish();
  return g;
}

}  // namespace spectre
