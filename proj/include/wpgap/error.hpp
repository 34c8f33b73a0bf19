#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wpgap {

enum class ErrorCode {
  InvalidInput,
  NotCoclosed,
  GapTooLarge,
  NotCoprime,
  PreconditionViolated,
  LengthMismatch,
  GammaMismatch,
  GenusTooLarge,
  ZeroDenominator,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wpgap
