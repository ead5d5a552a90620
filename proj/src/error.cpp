#include "cmt/error.hpp"

namespace cmt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::FactorizationTooHard: return "FactorizationTooHard";
    case ErrorKind::ZeroValuation: return "ZeroValuation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::TooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
  }
  return "Unknown";
}

}  // namespace cmt
