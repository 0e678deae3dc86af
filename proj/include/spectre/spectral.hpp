#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

/// Dense real symmetric matrix. Writes go through set(), which updates both triangles.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

  double trace() const;
  /// Maximum absolute row sum.
  double norm_inf() const;
  bool all_finite() const;
  SymmetricMatrix principal_submatrix(std::span<const std::size_t> rows) const;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues sorted non-increasing.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  /// i-th largest eigenvalue, 1-based; throws DomainError when out of range.
  double lambda(std::size_t i) const;
};

/// The matrix aD + bA. Construction enforces b != 0 and a/b >= -1.
class MatrixKind {
 public:
  MatrixKind(double a, double b);

  static MatrixKind adjacency() { return {0.0, 1.0}; }
  static MatrixKind laplacian() { return {1.0, -1.0}; }
  static MatrixKind signless() { return {1.0, 1.0}; }
  /// aD + A.
  static MatrixKind shifted(double a) { return {a, 1.0}; }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

SymmetricMatrix build_matrix(const Graph& g, const MatrixKind& kind);

/// All eigenvalues by Householder tridiagonalisation and implicit QL.
/// Throws DomainError on empty or non-finite input.
Spectrum eigenvalues(const SymmetricMatrix& m);

Spectrum spectrum(const Graph& g, const MatrixKind& kind);

/// i-th largest eigenvalue of aD + bA (1-based i).
double lambda_i(const Graph& g, const MatrixKind& kind, std::size_t i);

/// Block-average row sum matrix; generally not symmetric.
struct QuotientMatrix {
  std::size_t order = 0;
  std::vector<double> entries;  // row-major
  std::vector<std::size_t> block_sizes;

  double operator()(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
};

QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const Partition& p);

/// Eigenvalues of a quotient matrix, sorted non-increasing. Uses the 2x2
/// closed form for two blocks and the symmetric similarity
/// S^{1/2} R S^{-1/2} (S = diag of block sizes) otherwise.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& r);

struct Interlacing {
  bool holds = false;
  bool tight = false;
  /// First 1-based index i at which theta_i >= eta_i >= theta_{n-m+i} fails.
  std::optional<std::size_t> witness;
};

inline constexpr double kInterlacingTolerance = 1e-8;

/// Whether eta (length m) interlaces theta (length n > m), and whether the interlacing is tight.
Interlacing check_interlacing(std::span<const double> theta, std::span<const double> eta,
                              double tol = kInterlacingTolerance);

/// Every vertex of block i has the same number of neighbours in block j, for all i, j.
bool is_equitable(const Graph& g, const Partition& p);

/// Closed-form eigenvalues (larger first) of the two-block quotient of aD + A
///   [[(a+1)d1 - r/n1, r/n1], [r/n2, (a+1)d2 - r/n2]].
std::pair<double, double> two_part_quotient_eigen(double dbar1, double dbar2, std::size_t n1, std::size_t n2,
                                                  std::size_t r, double a);

}  // namespace spectre
