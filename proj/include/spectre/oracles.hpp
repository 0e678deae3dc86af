#pragma once

#include <cstdint>
#include <vector>

#include "spectre/graph.hpp"
#include "spectre/rng.hpp"
#include "spectre/spectral.hpp"

/// Slow reference implementations used to cross-check the main algorithms.
/// None of them shares code with the routines they check.
namespace spectre::oracle {

inline constexpr int kCycleEnumerationMaxOrder = 14;

/// Shortest cycle length by enumerating simple cycles; infinite for forests.
/// Throws GuardRefusal above kCycleEnumerationMaxOrder.
Girth girth_by_cycles(const Graph& g);

/// Eigenvalues by cyclic Jacobi rotations, sorted non-increasing.
std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& m);

/// Integer characteristic polynomial det(xI - A) of the adjacency matrix by
/// Faddeev-LeVerrier; coefficient i multiplies x^(n-i), so c[0] = 1.
std::vector<std::int64_t> characteristic_polynomial(const Graph& g);

/// Coefficients (same convention) of prod (x - root_i)^mult_i.
std::vector<std::int64_t> polynomial_from_roots(const std::vector<std::pair<std::int64_t, int>>& roots);

/// Closed-form adjacency spectra, sorted non-increasing.
std::vector<double> complete_spectrum(int n);
std::vector<double> cycle_spectrum(int n);
std::vector<double> complete_bipartite_spectrum(int left, int right);
std::vector<double> circulant_spectrum(int n, const std::vector<int>& offsets);

/// G(n, p) with edges drawn in (u, v) lexicographic order.
Graph random_gnp(int n, double p, Engine& rng);

/// Redraws G(n, p) until connected (p is raised after repeated failures).
Graph random_connected_gnp(int n, double p, Engine& rng);

/// Uniform double in [0, 1).
double uniform01(Engine& rng);

}  // namespace spectre::oracle
