// Spanning-tree packing via the union of k graphic matroids.
//
// Edges are inserted one at a time. An edge that closes a cycle in every
// forest starts a breadth-first search over exchange moves: an edge x may
// enter forest i by evicting any edge y on the i-path between x's endpoints,
// after which y must be re-homed. The search ends when some labelled edge
// joins two components of a forest it is not in; shortest exchange paths keep
// every forest acyclic after the swap.
//
// When the final union is short of k(n-1) edges, one more search seeded with
// all unused edges labels a set L whose vertex components (V_1..V_t) satisfy
// 2k(t-1) > sum d(V_i), the Nash-Williams/Tutte obstruction.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spectre/connectivity.hpp"
#include "spectre/errors.hpp"

namespace spectre {

namespace {

class ForestUnion {
 public:
  ForestUnion(const Graph& g, int k) : g_(g), k_(k), edges_(g.edges()), home_(edges_.size(), -1) {}

  const std::vector<Edge>& edges() const { return edges_; }
  int home(std::size_t e) const { return home_[e]; }

  std::size_t placed() const {
    return static_cast<std::size_t>(std::count_if(home_.begin(), home_.end(), [](int h) { return h >= 0; }));
  }

  bool insert(std::size_t e) { return search({e}).augmented; }

  /// Labelled edge set of a failed multi-source search from every unused edge.
  std::vector<char> blocking_set() {
    std::vector<std::size_t> unused;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (home_[e] < 0) unused.push_back(e);
    }
    auto result = search(unused);
    if (result.augmented) throw std::logic_error("tree packing: union was not maximal");
    return result.labelled;
  }

  TreePacking packing() const {
    TreePacking out;
    out.k = k_;
    out.forests.assign(static_cast<std::size_t>(k_), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (home_[e] >= 0) out.forests[home_[e]].push_back(edges_[e]);
    }
    return out;
  }

 private:
  struct Rooted {
    std::vector<int> component;
    std::vector<int> parent_edge;  // edge id to parent, -1 at roots
    std::vector<int> depth;
  };

  struct SearchResult {
    bool augmented = false;
    std::vector<char> labelled;
  };

  void root_forests() {
    const int n = g_.order();
    std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(n));
    rooted_.assign(static_cast<std::size_t>(k_), {});
    for (int i = 0; i < k_; ++i) {
      for (auto& list : adj) list.clear();
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (home_[e] != i) continue;
        adj[edges_[e].u].emplace_back(edges_[e].v, static_cast<int>(e));
        adj[edges_[e].v].emplace_back(edges_[e].u, static_cast<int>(e));
      }
      Rooted& r = rooted_[i];
      r.component.assign(static_cast<std::size_t>(n), -1);
      r.parent_edge.assign(static_cast<std::size_t>(n), -1);
      r.depth.assign(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> stack;
      for (Vertex s = 0; s < n; ++s) {
        if (r.component[s] >= 0) continue;
        r.component[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
          Vertex u = stack.back();
          stack.pop_back();
          for (auto [w, e] : adj[u]) {
            if (r.component[w] >= 0) continue;
            r.component[w] = s;
            r.parent_edge[w] = e;
            r.depth[w] = r.depth[u] + 1;
            stack.push_back(w);
          }
        }
      }
    }
  }

  Vertex other_end(std::size_t e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  /// Edges of forest i on the path between u and v (same component).
  void forest_path(int i, Vertex u, Vertex v, std::vector<int>& out) const {
    const Rooted& r = rooted_[i];
    out.clear();
    while (u != v) {
      if (r.depth[u] >= r.depth[v]) {
        out.push_back(r.parent_edge[u]);
        u = other_end(static_cast<std::size_t>(r.parent_edge[u]), u);
      } else {
        out.push_back(r.parent_edge[v]);
        v = other_end(static_cast<std::size_t>(r.parent_edge[v]), v);
      }
    }
  }

  SearchResult search(const std::vector<std::size_t>& sources) {
    root_forests();
    SearchResult result;
    result.labelled.assign(edges_.size(), 0);
    std::vector<int> came_from(edges_.size(), -1);
    std::vector<std::size_t> queue(sources.begin(), sources.end());
    for (std::size_t s : sources) result.labelled[s] = 1;
    std::vector<int> path;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      const Edge& ex = edges_[x];
      for (int i = 0; i < k_; ++i) {
        if (home_[x] == i) continue;
        if (rooted_[i].component[ex.u] != rooted_[i].component[ex.v]) {
          augment(x, i, came_from);
          result.augmented = true;
          return result;
        }
        forest_path(i, ex.u, ex.v, path);
        for (int y : path) {
          if (result.labelled[y]) continue;
          result.labelled[y] = 1;
          came_from[y] = static_cast<int>(x);
          queue.push_back(static_cast<std::size_t>(y));
        }
      }
    }
    return result;
  }

  void augment(std::size_t x, int forest, const std::vector<int>& came_from) {
    auto cur = static_cast<int>(x);
    int target = forest;
    while (true) {
      const int old = home_[cur];
      home_[cur] = target;
      if (came_from[cur] < 0) break;
      target = old;
      cur = came_from[cur];
    }
  }

  const Graph& g_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<int> home_;
  std::vector<Rooted> rooted_;
};

PartitionCertificate make_certificate(const Graph& g, std::vector<int> labels, int k) {
  Partition p = Partition::from_labels(labels);
  const auto t = static_cast<std::int64_t>(p.size());
  const auto sum = static_cast<std::int64_t>(partition_boundary_sum(g, p));
  return {std::move(p), 2 * static_cast<std::int64_t>(k) * (t - 1) - sum};
}

PartitionCertificate singleton_certificate(const Graph& g, int k) {
  std::vector<int> labels(static_cast<std::size_t>(g.order()));
  std::iota(labels.begin(), labels.end(), 0);
  return make_certificate(g, std::move(labels), k);
}

}  // namespace

TauDecision tau_at_least(const Graph& g, int k, TauOptions options) {
  if (k <= 0) throw DomainError("tau_at_least needs k >= 1");
  const int n = g.order();
  if (n == 0) throw DomainError("tau_at_least needs a non-empty graph");
  const auto needed = static_cast<std::size_t>(k) * static_cast<std::size_t>(n - 1);

  auto negative = [&](PartitionCertificate cert) {
    if (options.canonicalize && n <= kPartitionOracleMaxOrder) cert = nash_williams_oracle(g, k).worst;
    return TauDecision{false, std::move(cert)};
  };

  if (!is_connected(g)) return negative(make_certificate(g, components(g), k));
  if (g.size() < needed) return negative(singleton_certificate(g, k));

  ForestUnion forests(g, k);
  for (std::size_t e = 0; e < forests.edges().size(); ++e) forests.insert(e);
  if (forests.placed() == needed) return TauDecision{true, forests.packing()};

  // Components of the blocking set's edges give the deficient partition.
  auto labelled = forests.blocking_set();
  std::vector<Edge> blocking;
  for (std::size_t e = 0; e < labelled.size(); ++e) {
    if (labelled[e]) blocking.push_back(forests.edges()[e]);
  }
  return negative(make_certificate(g, components(Graph::from_edges(n, blocking)), k));
}

int tau(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  const auto cap = static_cast<int>(g.size() / static_cast<std::size_t>(n - 1));
  int best = 0;
  for (int k = 1; k <= cap; ++k) {
    if (!tau_at_least(g, k, {.canonicalize = false}).answer) break;
    best = k;
  }
  return best;
}

bool verify_tree_packing(const Graph& g, const TreePacking& packing, bool require_spanning) {
  const int n = g.order();
  if (static_cast<int>(packing.forests.size()) != packing.k) return false;
  std::vector<Edge> all;
  for (const auto& forest : packing.forests) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Edge& e : forest) {
      if (!g.has_edge(e.u, e.v)) return false;
      int ru = find(e.u);
      int rv = find(e.v);
      if (ru == rv) return false;  // cycle
      parent[ru] = rv;
      all.push_back(e);
    }
    if (require_spanning && forest.size() != static_cast<std::size_t>(n > 0 ? n - 1 : 0)) return false;
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool verify_certificate(const Graph& g, const PartitionCertificate& cert, int k) {
  if (cert.partition.order() != g.order()) return false;
  const auto t = static_cast<std::int64_t>(cert.partition.size());
  const auto sum = static_cast<std::int64_t>(partition_boundary_sum(g, cert.partition));
  const std::int64_t deficiency = 2 * static_cast<std::int64_t>(k) * (t - 1) - sum;
  return deficiency == cert.deficiency && deficiency > 0;
}

}  // namespace spectre
