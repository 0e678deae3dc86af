#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectre {

using Vertex = int;

/// Undirected edge, always stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// Builds the set {i : bit i of mask is set}, for n <= 64.
  static VertexSet from_mask(std::uint64_t mask, int n);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Membership bitmap over {0..n-1}; throws DomainError if a member is >= n.
  std::vector<char> indicator(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Ordered blocks of a vertex set. Validated against an order n on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless blocks are non-empty, disjoint and cover {0..n-1}.
  Partition(std::vector<VertexSet> blocks, int n);

  /// Builds a partition from a block label per vertex (labels need not be dense).
  static Partition from_labels(std::span<const int> labels);

  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  int order() const noexcept { return order_; }
  /// Block index of every vertex.
  std::vector<int> labels() const;

 private:
  std::vector<VertexSet> blocks_;
  int order_ = 0;
};

/// Girth value: a finite cycle length >= 3 or infinite for forests.
class Girth {
 public:
  constexpr Girth() = default;
  constexpr Girth(int length) : length_(length) {}  // NOLINT: implicit by intent
  static constexpr Girth infinite() { return Girth{}; }

  constexpr bool finite() const noexcept { return length_ > 0; }
  /// Cycle length; throws NotApplicable when infinite.
  int value() const;
  std::string to_string() const;

  friend constexpr bool operator==(const Girth&, const Girth&) = default;

 private:
  int length_ = 0;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  double average_degree = 0.0;
};

/// Finite simple undirected graph on vertices {0..n-1}. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Graph with n isolated vertices.
  explicit Graph(int n);

  /// Throws ValidationError on self-loops or duplicate edges, DomainError on out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;
  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Parsing and serialization.

/// Edge-list text: "u v" per line, optional leading "n N" header, '#' comments.
Graph from_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 (bias 63, 6 bits per byte, upper triangle column by column).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Combinatorial quantities.

Girth girth(const Graph& g);
DegreeStats degree_stats(const Graph& g);

/// d(X): edges with exactly one end in X. X must be non-empty and proper.
std::size_t boundary(const Graph& g, const VertexSet& x);
/// Bitmask variant for exhaustive enumeration (n <= 64); no domain checks.
std::size_t boundary_mask(const Graph& g, std::uint64_t mask);
/// e(X,Y) for disjoint non-empty X, Y.
std::size_t cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y);
/// Sum over blocks of d(V_i).
std::size_t partition_boundary_sum(const Graph& g, const Partition& p);

/// G[X], with vertices renumbered in increasing order of X.
Graph induced(const Graph& g, const VertexSet& x);
/// G - E'. Throws DomainError if a listed edge is absent.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

bool is_connected(const Graph& g);
/// Component label per vertex, labels numbered by smallest member.
std::vector<int> components(const Graph& g);
/// Proper 2-colouring if one exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace spectre
