#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUnsound = 1,  ///< a theorem or oracle check failed
  kExitInput = 2,    ///< malformed input or arguments
  kExitGuard = 3,    ///< a size guard refused the request
};

/// Command line entry point. `args` excludes the program name; results go to `out`
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct LoadedGraph {
  Graph graph;
  std::string source;
  std::optional<std::uint64_t> seed;
};

/// A file path (graph6 when the extension is .g6 or the content looks like graph6,
/// edge list otherwise) or a generator spec such as "petersen" or "cycle:n=7".
LoadedGraph load_input(const std::string& input);

/// Worker cap from SPECTRE_THREADS; 0 (hardware concurrency) when unset, 0 or invalid.
unsigned thread_count();

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  ///< first few failure descriptions

  bool ok() const { return passed == trials; }
};

const std::vector<std::string>& suite_names();

/// Runs one randomized oracle suite. With inject_fault the implementation side
/// is perturbed so every trial should fail.
SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed, bool inject_fault = false);

}  // namespace spectre::cli
