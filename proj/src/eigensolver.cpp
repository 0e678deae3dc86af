// Symmetric eigenvalues: Householder reduction to tridiagonal form, then the
// implicit QL iteration with Wilkinson-style shifts (EISPACK tql1 lineage).

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "spectre/errors.hpp"
#include "spectre/spectral.hpp"

namespace spectre {

namespace {

// Reduces a (row-major, n x n, symmetric) in place; returns diagonal d and
// sub-diagonal e with e[i] coupling i and i+1, e[n-1] = 0.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d, std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<double> v(n);
  std::vector<double> p(n);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale = std::max(scale, std::abs(at(i, k)));
    if (scale == 0.0) {
      e[k] = 0.0;
      continue;
    }
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = at(i, k) / scale;
      norm2 += v[i] * v[i];
    }
    const double norm = std::sqrt(norm2);
    const double alpha = v[k + 1] > 0 ? -norm : norm;
    // v = x - alpha e1, so that H x = alpha e1.
    v[k + 1] -= alpha;
    double vtv = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vtv += v[i] * v[i];
    e[k] = alpha * scale;
    if (vtv == 0.0) continue;
    const double beta = 2.0 / vtv;

    double vtp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      p[i] = beta * s;
      vtp += v[i] * p[i];
    }
    const double kk = 0.5 * beta * vtp;
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= kk * v[i];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= v[i] * p[j] + p[i] * v[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
  if (n >= 2) e[n - 2] = at(n - 1, n - 2);
  e[n - 1] = 0.0;
}

void implicit_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 60;
  double shift_total = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxSweeps) throw DomainError("eigenvalues: QL iteration failed to converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += shift_total;
    e[l] = 0.0;
  }
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) throw DomainError("eigenvalues of an empty matrix");
  if (!m.all_finite()) throw DomainError("eigenvalues: matrix has a non-finite entry");
  std::vector<double> work(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i * n + j] = m(i, j);
  }
  std::vector<double> d;
  std::vector<double> e;
  tridiagonalize(work, n, d, e);
  implicit_ql(d, e);
  std::sort(d.begin(), d.end(), std::greater<>());
  return Spectrum{std::move(d)};
}

}  // namespace spectre
