#include <algorithm>
#include <limits>
#include <queue>

#include "spectre/connectivity.hpp"
#include "spectre/errors.hpp"

namespace spectre {

EdgeCut edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("edge connectivity needs at least 2 vertices");

  if (!is_connected(g)) {
    auto label = components(g);
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] == 0) side.push_back(v);
    }
    return {0, VertexSet(std::move(side))};
  }

  // Contracted multigraph: adjacency as (neighbour, weight) lists over active super-vertices.
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v].emplace_back(w, 1);
  }
  std::vector<std::vector<Vertex>> group(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) group[v] = {v};
  std::vector<char> active(static_cast<std::size_t>(n), 1);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_side;

  std::vector<std::int64_t> key(static_cast<std::size_t>(n));
  std::vector<char> added(static_cast<std::size_t>(n));
  // Larger key first, then smaller index.
  using Entry = std::pair<std::int64_t, int>;
  auto cmp = [](const Entry& x, const Entry& y) { return x.first != y.first ? x.first < y.first : x.second > y.second; };

  for (int remaining = n; remaining > 1; --remaining) {
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (Vertex v = 0; v < n; ++v) {
      if (!active[v]) continue;
      key[v] = 0;
      added[v] = 0;
      heap.emplace(0, v);
    }
    int prev = -1;
    int last = -1;
    for (int step = 0; step < remaining; ++step) {
      Entry top = heap.top();
      heap.pop();
      while (added[top.second] || top.first != key[top.second]) {
        top = heap.top();
        heap.pop();
      }
      const int u = top.second;
      added[u] = 1;
      prev = last;
      last = u;
      for (auto [w, wt] : adj[u]) {
        if (added[w]) continue;
        key[w] += wt;
        heap.emplace(key[w], w);
      }
    }
    if (key[last] < best) {
      best = key[last];
      best_side = group[last];
    }

    // Merge `last` into `prev`.
    const int s = prev;
    const int t = last;
    for (auto [w, wt] : adj[t]) {
      auto& wl = adj[w];
      wl.erase(std::remove_if(wl.begin(), wl.end(), [t](const auto& p) { return p.first == t; }), wl.end());
      if (w == s) continue;
      auto it = std::find_if(wl.begin(), wl.end(), [s](const auto& p) { return p.first == s; });
      if (it != wl.end()) {
        it->second += wt;
      } else {
        wl.emplace_back(s, wt);
      }
      auto& sl = adj[s];
      auto jt = std::find_if(sl.begin(), sl.end(), [w](const auto& p) { return p.first == w; });
      if (jt != sl.end()) {
        jt->second += wt;
      } else {
        sl.emplace_back(w, wt);
      }
    }
    adj[t].clear();
    active[t] = 0;
    group[s].insert(group[s].end(), group[t].begin(), group[t].end());
    group[t].clear();
  }
  return {static_cast<std::size_t>(best), VertexSet(std::move(best_side))};
}

std::size_t brute_force_edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("edge connectivity needs at least 2 vertices");
  if (n > kBruteForceCutMaxOrder) {
    throw GuardRefusal("brute-force cut enumeration refused for n = " + std::to_string(n) + " > " +
                       std::to_string(kBruteForceCutMaxOrder));
  }
  // Fix the top vertex outside X; every cut is counted once.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t mask = 1; mask < limit; ++mask) best = std::min(best, boundary_mask(g, mask));
  return best;
}

}  // namespace spectre
