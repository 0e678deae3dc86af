#include "spectre/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "spectre/errors.hpp"

namespace spectre {

SymmetricMatrix::SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * order_ + j] = value;
  data_[j * order_ + i] = value;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += data_[i * order_ + i];
  return t;
}

double SymmetricMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < order_; ++j) row += std::abs(data_[i * order_ + j]);
    best = std::max(best, row);
  }
  return best;
}

bool SymmetricMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

SymmetricMatrix SymmetricMatrix::principal_submatrix(std::span<const std::size_t> rows) const {
  SymmetricMatrix sub(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= order_) throw DomainError("principal_submatrix: index out of range");
    for (std::size_t j = i; j < rows.size(); ++j) sub.set(i, j, (*this)(rows[i], rows[j]));
  }
  return sub;
}

double Spectrum::lambda(std::size_t i) const {
  if (i < 1 || i > values.size()) {
    throw DomainError("eigenvalue index " + std::to_string(i) + " outside [1, " + std::to_string(values.size()) + "]");
  }
  return values[i - 1];
}

MatrixKind::MatrixKind(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("matrix kind: non-finite coefficient");
  if (b == 0.0) throw DomainError("matrix kind: b must be nonzero");
  if (a / b < -1.0) throw DomainError("matrix kind: a/b must be at least -1");
}

SymmetricMatrix build_matrix(const Graph& g, const MatrixKind& kind) {
  const auto n = static_cast<std::size_t>(g.order());
  SymmetricMatrix m(n);
  for (Vertex v = 0; v < g.order(); ++v) {
    m.set(v, v, kind.a() * g.degree(v));
    for (Vertex w : g.neighbors(v)) {
      if (v < w) m.set(v, w, kind.b());
    }
  }
  return m;
}

Spectrum spectrum(const Graph& g, const MatrixKind& kind) { return eigenvalues(build_matrix(g, kind)); }

double lambda_i(const Graph& g, const MatrixKind& kind, std::size_t i) {
  if (i < 1 || i > static_cast<std::size_t>(g.order())) {
    throw DomainError("eigenvalue index " + std::to_string(i) + " outside [1, " + std::to_string(g.order()) + "]");
  }
  return spectrum(g, kind).lambda(i);
}

QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const Partition& p) {
  if (static_cast<std::size_t>(p.order()) != m.order()) throw DomainError("quotient_matrix: partition order mismatch");
  const std::size_t k = p.size();
  QuotientMatrix r;
  r.order = k;
  r.entries.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& bi = p.blocks()[i];
    r.block_sizes.push_back(bi.size());
    for (std::size_t j = 0; j < k; ++j) {
      double sum = 0.0;
      for (Vertex u : bi) {
        for (Vertex v : p.blocks()[j]) sum += m(u, v);
      }
      r.entries[i * k + j] = sum / static_cast<double>(bi.size());
    }
  }
  return r;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& r) {
  const std::size_t k = r.order;
  if (k == 0) throw DomainError("quotient_eigenvalues: empty quotient");
  if (k == 1) return {r(0, 0)};
  if (k == 2) {
    const double tr = r(0, 0) + r(1, 1);
    const double half_gap = 0.5 * (r(0, 0) - r(1, 1));
    // Off-diagonal product is a symmetric block sum squared over n1 n2, hence >= 0.
    const double disc = std::sqrt(half_gap * half_gap + std::max(0.0, r(0, 1) * r(1, 0)));
    return {0.5 * tr + disc, 0.5 * tr - disc};
  }
  SymmetricMatrix sym(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      // sqrt(n_i / n_j) R_ij equals the block sum over sqrt(n_i n_j), symmetric in (i, j).
      const double w = std::sqrt(static_cast<double>(r.block_sizes[i]) / static_cast<double>(r.block_sizes[j]));
      sym.set(i, j, w * r(i, j));
    }
  }
  return eigenvalues(sym).values;
}

Interlacing check_interlacing(std::span<const double> theta, std::span<const double> eta, double tol) {
  const std::size_t n = theta.size();
  const std::size_t m = eta.size();
  if (m < 1 || n <= m) throw DomainError("check_interlacing needs n > m >= 1");
  Interlacing out;
  for (std::size_t i = 0; i < m; ++i) {
    if (eta[i] > theta[i] + tol || eta[i] < theta[n - m + i] - tol) {
      out.witness = i + 1;
      return out;
    }
  }
  out.holds = true;
  auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
  // prefix[k]: theta_i = eta_i for all i < k;  suffix[k]: theta_{n-m+i} = eta_i for all i >= k.
  std::vector<char> suffix(m + 1, 1);
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] && close(theta[n - m + i], eta[i]);
  bool prefix = true;
  for (std::size_t k = 0; k <= m; ++k) {
    if (prefix && suffix[k]) {
      out.tight = true;
      break;
    }
    if (k < m) prefix = prefix && close(theta[k], eta[k]);
  }
  return out;
}

bool is_equitable(const Graph& g, const Partition& p) {
  if (p.order() != g.order()) throw DomainError("is_equitable: partition order mismatch");
  const auto label = p.labels();
  const std::size_t k = p.size();
  std::vector<int> counts(k);
  std::vector<int> reference(k * k, -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex w : g.neighbors(v)) ++counts[label[w]];
    const auto row = static_cast<std::size_t>(label[v]) * k;
    for (std::size_t j = 0; j < k; ++j) {
      if (reference[row + j] < 0) {
        reference[row + j] = counts[j];
      } else if (reference[row + j] != counts[j]) {
        return false;
      }
    }
  }
  return true;
}

std::pair<double, double> two_part_quotient_eigen(double dbar1, double dbar2, std::size_t n1, std::size_t n2,
                                                  std::size_t r, double a) {
  if (n1 == 0 || n2 == 0) throw DomainError("two_part_quotient_eigen: block sizes must be positive");
  const double rn1 = static_cast<double>(r) / static_cast<double>(n1);
  const double rn2 = static_cast<double>(r) / static_cast<double>(n2);
  const double p11 = (a + 1.0) * dbar1 - rn1;
  const double p22 = (a + 1.0) * dbar2 - rn2;
  // lambda^2 - (p11 + p22) lambda + p11 p22 - r^2/(n1 n2); discriminant rewritten as (p11 - p22)^2 + 4 r^2/(n1 n2).
  const double root = std::sqrt((p11 - p22) * (p11 - p22) + 4.0 * rn1 * rn2);
  return {0.5 * (p11 + p22 + root), 0.5 * (p11 + p22 - root)};
}

}  // namespace spectre
