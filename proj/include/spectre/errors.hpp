#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectre {

/// Malformed textual input (edge list, graph6, generator spec).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  /// 1-based line of the offending input, 0 when not line oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a structural invariant (self-loop, duplicate edge, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem or bound whose structural preconditions are not met.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine refused an instance above its size guard.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectre
