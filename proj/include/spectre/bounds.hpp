#pragma once

#include <cstdint>

#include "spectre/graph.hpp"

namespace spectre {

/// Degree/girth parameters shared by the bound formulas.
struct BoundParams {
  std::int64_t delta = 0;  ///< minimum degree
  Girth g;                 ///< girth, finite for every bound below
  std::int64_t k = 0;
  double a = 0.0;
  std::int64_t n = 0;  ///< graph order, only used by the strong edge-connectivity threshold

  /// floor((g - 1) / 2); throws NotApplicable for infinite girth.
  int t() const;
};

/// Minimum size of a vertex set X with d(X) < delta in a graph of minimum degree
/// delta and girth g:
///   g = 2t+1:  1 + delta + sum_{i=2..t} (delta-1)^i
///   g = 2t+2:  2 + 2 (delta-1)^t + sum_{i=1..t-1} (delta-1)^i
/// Exact integer arithmetic; throws DomainError on delta < 2 or overflow,
/// NotApplicable on infinite girth.
std::uint64_t n1_star(std::int64_t delta, Girth g);

/// Moore lower bound on the order of a d-regular graph of girth g:
///   g = 2t+1:  1 + d sum_{i=0..t-1} (d-1)^i
///   g = 2t+2:  2 sum_{i=0..t} (d-1)^i
std::uint64_t moore_bound(std::int64_t d, Girth g);

/// (a+1) delta - (2k-1)/n1*. Needs delta >= 2k >= 4, finite g, a >= -1.
double tau_threshold(std::int64_t delta, std::int64_t k, Girth g, double a);

/// (a+1) delta - (k-1) n / (n1* (n - n1*)). Needs delta >= k >= 2, finite g, a >= -1, n > n1*.
double kappa_threshold_strong(std::int64_t delta, std::int64_t k, Girth g, double a, std::int64_t n);

/// (a+1) delta - 2(k-1)/n1*. Needs delta >= k >= 2, finite g, a >= -1.
double kappa_threshold_weak(std::int64_t delta, std::int64_t k, Girth g, double a);

/// The subtracted terms of the three thresholds above, for callers that
/// rescale by b in the aD + bA form. Same preconditions.
double tau_penalty(std::int64_t delta, std::int64_t k, Girth g);
double kappa_strong_penalty(std::int64_t delta, std::int64_t k, Girth g, std::int64_t n);
double kappa_weak_penalty(std::int64_t delta, std::int64_t k, Girth g);

}  // namespace spectre
