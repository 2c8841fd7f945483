#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcgc {

enum class ErrorKind {
  DuplicateElement,
  CycleDetected,
  UnknownElement,
  TooLarge,
  NotCompleteLattice,
  ShapeMismatch,
  NotInClass,
  NotIsomorphic,
  NotBlockPreserving,
  NotSound,
  NotGI,
  UnknownName,
  BoundTooSmall,
  SizeGuard,
  SyntaxError,
  UseBeforeAssign,
  UnknownVariable,
  DomainMismatch,
  FormatError,
  InvariantViolated,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; `kind()` lets
// callers (CLI exit codes, tests) dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcgc
