#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

Graph complete(int n);
Graph complete_bipartite(int left, int right);
Graph cycle(int n);
Graph path(int n);
/// Vertex i is adjacent to i +- s (mod n) for each s in `offsets`, 1 <= s <= n/2.
Graph circulant(int n, const std::vector<int>& offsets);

// Named cages, loaded from the bundled edge lists and checked for regularity and girth.
Graph petersen();       ///< (3,5)-cage, n = 10; vertices 0..4 outer cycle, i ~ i+5 spokes
Graph heawood();        ///< (3,6)-cage, n = 14
Graph mcgee();          ///< (3,7)-cage, n = 24
Graph tutte_coxeter();  ///< (3,8)-cage, n = 30

/// d-regular simple graph from the pairing model: stub pairs are drawn uniformly
/// and redrawn when they would create a loop or repeated edge; if no admissible
/// pair remains the pairing restarts (at most 1000 restarts). Not necessarily connected.
Graph random_regular(int n, int d, std::uint64_t seed);

/// random_regular(n, delta or delta+1 for parity) plus between 0 and n extra random edges.
Graph random_min_degree(int n, int delta, std::uint64_t seed);

/// "family:key=value,key=value", e.g. "random_regular:n=50,d=6,seed=42" or "circulant:n=10,s=1/3".
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::string> params;

  static GeneratorSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Family names accepted by generate().
const std::vector<std::string>& generator_families();

/// Throws ParseError on an unknown family or malformed parameter, DomainError on invalid values.
Graph generate(const GeneratorSpec& spec);

}  // namespace spectre
