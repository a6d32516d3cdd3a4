#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

/// Bad user input (unknown type label, malformed JSON, ...). CLI exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition of an operation violated by an otherwise well-formed value.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural invariant that must hold by a theorem failed to hold.
/// Firing one of these means a bug, not a property of the input.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

/// Internal search bound exceeded (signals a bound bug, never an answer).
struct SearchLimitError : std::runtime_error {
  explicit SearchLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace alcove
