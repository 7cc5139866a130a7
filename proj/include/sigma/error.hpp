#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigma {

enum class ErrorKind {
  NoNormalization,
  SingletonSet,
  PreconditionViolated,
  DegenerateDenominator,
  BudgetExceeded,
  RootFindingFailure,
  EmptyRootSet,
  GreedyFailed,
  SpecMismatch,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sigma
