#include "spectre/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <sstream>

#include "spectre/errors.hpp"

namespace spectre {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw DomainError("vertex set contains a duplicate");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw DomainError("vertex set contains a negative index");
  }
}

VertexSet VertexSet::from_mask(std::uint64_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::indicator(int n) const {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_) {
    if (v >= n) throw DomainError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<VertexSet> blocks, int n) : blocks_(std::move(blocks)), order_(n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::size_t covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw DomainError("partition has an empty block");
    for (Vertex v : block) {
      if (v >= n) throw DomainError("partition block member out of range");
      if (seen[v]) throw DomainError("partition blocks overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) throw DomainError("partition does not cover the vertex set");
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::vector<int> distinct(labels.begin(), labels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::vector<Vertex>> members(distinct.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto idx = std::lower_bound(distinct.begin(), distinct.end(), labels[v]) - distinct.begin();
    members[idx].push_back(static_cast<Vertex>(v));
  }
  // Order blocks by their smallest member so equal partitions compare equal.
  std::sort(members.begin(), members.end());
  std::vector<VertexSet> blocks;
  blocks.reserve(members.size());
  for (auto& m : members) blocks.emplace_back(std::move(m));
  return Partition(std::move(blocks), static_cast<int>(labels.size()));
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(order_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Vertex v : blocks_[b]) out[v] = static_cast<int>(b);
  }
  return out;
}

// ---------------------------------------------------------------- Girth

int Girth::value() const {
  if (!finite()) throw NotApplicable("girth is infinite (graph is acyclic)");
  return length_;
}

std::string Girth::to_string() const { return finite() ? std::to_string(length_) : "infinite"; }

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw ValidationError("duplicate edge (" + std::to_string(std::min<int>(v, *dup)) + "," +
                            std::to_string(std::max<int>(v, *dup)) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------- edge list I/O

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph from_edge_list(std::istream& in) {
  constexpr long long kMaxVertex = std::numeric_limits<int>::max() - 1;
  std::vector<Edge> edges;
  std::optional<long long> declared;
  long long max_index = -1;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_edge = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (declared || seen_edge) throw ParseError("header 'n <N>' must appear once, before edges", line_no);
      long long count = 0;
      if (!parse_int(tokens[1], count) || count < 0 || count > kMaxVertex) {
        throw ParseError("bad vertex count '" + std::string(tokens[1]) + "'", line_no);
      }
      declared = count;
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v) || u < 0 || v < 0 ||
        u > kMaxVertex || v > kMaxVertex) {
      throw ParseError("expected 'u v' with non-negative integers, got '" + std::string(line) + "'", line_no);
    }
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_index = std::max({max_index, u, v});
    seen_edge = true;
  }
  if (declared && max_index >= *declared) {
    throw ValidationError("vertex " + std::to_string(max_index) + " exceeds declared count " +
                          std::to_string(*declared));
  }
  int n = static_cast<int>(declared ? *declared : max_index + 1);
  return Graph::from_edges(n, edges);
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------- combinatorics

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Nothing shorter can close beyond this depth.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? Girth::infinite() : Girth(best);
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() < 1) throw DomainError("degree statistics need at least one vertex");
  DegreeStats s{std::numeric_limits<int>::max(), 0, 0.0};
  for (Vertex v = 0; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.average_degree = 2.0 * static_cast<double>(g.size()) / g.order();
  return s;
}

std::size_t boundary(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw DomainError("boundary of the empty set");
  if (x.size() >= static_cast<std::size_t>(g.order())) throw DomainError("boundary of the whole vertex set");
  auto in = x.indicator(g.order());
  std::size_t count = 0;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) count += in[w] ? 0 : 1;
  }
  return count;
}

std::size_t boundary_mask(const Graph& g, std::uint64_t mask) {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!(mask >> v & 1U)) continue;
    for (Vertex w : g.neighbors(v)) count += (mask >> w & 1U) ? 0 : 1;
  }
  return count;
}

std::size_t cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.empty() || y.empty()) throw DomainError("cross_edges needs non-empty sets");
  auto in_y = y.indicator(g.order());
  auto in_x = x.indicator(g.order());
  for (Vertex v : x) {
    if (in_y[v]) throw DomainError("cross_edges needs disjoint sets");
  }
  std::size_t count = 0;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) count += in_y[w] ? 1 : 0;
  }
  return count;
}

std::size_t partition_boundary_sum(const Graph& g, const Partition& p) {
  if (p.order() != g.order()) throw DomainError("partition order differs from graph order");
  auto label = p.labels();
  std::size_t crossing = 0;
  for (const Edge& e : g.edges()) crossing += label[e.u] != label[e.v] ? 1 : 0;
  return 2 * crossing;
}

Graph induced(const Graph& g, const VertexSet& x) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v : x) {
    if (v >= g.order()) throw DomainError("induced: vertex out of range");
    index[v] = next++;
  }
  std::vector<Edge> edges;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && index[w] >= 0) edges.emplace_back(index[v], index[w]);
    }
  }
  return Graph::from_edges(next, edges);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop) {
    if (!g.has_edge(e.u, e.v)) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph::from_edges(g.order(), kept);
}

std::vector<int> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto label = components(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

}  // namespace spectre
