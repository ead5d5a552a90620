#pragma once

#include <stdexcept>
#include <string>

namespace cmt {

enum class ErrorKind {
  InvalidInput,
  CapExceeded,
  FactorizationTooHard,
  ZeroValuation,
  InternalInconsistency,
  TooLargeForEnumeration,
  DivisibilityViolation,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is what the
// CLI maps to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cmt
