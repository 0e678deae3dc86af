#include "spectre/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "spectre/errors.hpp"

namespace spectre::oracle {

namespace {

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

Girth girth_by_cycles(const Graph& g) {
  const int n = g.order();
  if (n > kCycleEnumerationMaxOrder) throw GuardRefusal("cycle enumeration refused for n > 14");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  int best = 0;
  std::vector<char> on_path(n, 0);
  // Cycles through their smallest vertex s, visiting only vertices > s.
  std::function<void(int, int, int)> extend = [&](int s, int v, int len) {
    if (best != 0 && len >= best) return;
    for (int w = s; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (w == s) {
        if (len >= 3 && (best == 0 || len < best)) best = len;
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      extend(s, w, len + 1);
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    extend(s, s, 1);
    on_path[s] = 0;
  }
  return best == 0 ? Girth::infinite() : Girth(best);
}

std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i][i];
  return sorted_desc(std::move(diag));
}

std::vector<std::int64_t> characteristic_polynomial(const Graph& g) {
  const int n = g.order();
  using Matrix = std::vector<std::vector<std::int64_t>>;
  Matrix a(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;

  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  Matrix mk(n, std::vector<std::int64_t>(n, 0));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k) / k
    Matrix next(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s + (i == j ? c[k - 1] : 0);
      }
    mk = std::move(next);
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    if (tr % k != 0) throw std::logic_error("characteristic polynomial: inexact division");
    c[k] = -tr / k;
  }
  return c;
}

std::vector<std::int64_t> polynomial_from_roots(const std::vector<std::pair<std::int64_t, int>>& roots) {
  std::vector<std::int64_t> p{1};
  for (auto [r, mult] : roots) {
    for (int t = 0; t < mult; ++t) {
      std::vector<std::int64_t> q(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += p[i];
        q[i + 1] -= r * p[i];
      }
      p = std::move(q);
    }
  }
  return p;
}

std::vector<double> complete_spectrum(int n) {
  std::vector<double> v(n, -1.0);
  if (n > 0) v[0] = n - 1.0;
  return v;
}

std::vector<double> cycle_spectrum(int n) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = 2.0 * std::cos(2.0 * std::numbers::pi * j / n);
  return sorted_desc(std::move(v));
}

std::vector<double> complete_bipartite_spectrum(int left, int right) {
  std::vector<double> v(left + right, 0.0);
  const double r = std::sqrt(static_cast<double>(left) * right);
  v.front() = r;
  v.back() = -r;
  return sorted_desc(std::move(v));
}

std::vector<double> circulant_spectrum(int n, const std::vector<int>& offsets) {
  std::vector<double> v(n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int s : offsets) {
      const double c = std::cos(2.0 * std::numbers::pi * j * s / n);
      v[j] += (2 * s == n) ? c : 2.0 * c;
    }
  }
  return sorted_desc(std::move(v));
}

double uniform01(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph random_gnp(int n, double p, Engine& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph random_connected_gnp(int n, double p, Engine& rng) {
  for (int attempt = 0;; ++attempt) {
    Graph g = random_gnp(n, p, rng);
    if (is_connected(g)) return g;
    if (attempt % 20 == 19) p = std::min(1.0, p + 0.1);
  }
}

}  // namespace spectre::oracle
