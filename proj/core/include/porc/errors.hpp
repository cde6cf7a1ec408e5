#pragma once

#include <stdexcept>
#include <string>

namespace porc {

/// Raised when a field inverse of zero is requested.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// A mathematical invariant that must hold did not. Always a bug or a
/// counterexample, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// An exhaustive oracle was asked to run beyond its configured bound.
class SearchBoundExceeded : public std::out_of_range {
 public:
  explicit SearchBoundExceeded(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace porc
