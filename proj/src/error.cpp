#include "wpgap/error.hpp"

namespace wpgap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotCoclosed: return "NotCoclosed";
    case ErrorCode::GapTooLarge: return "GapTooLarge";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::GammaMismatch: return "GammaMismatch";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace wpgap
