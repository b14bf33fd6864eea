#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtt {

enum class ErrorCode {
  SizeTooSmall,
  DimensionMismatch,
  DivisibilityViolation,
  DegenerateSpectrum,
  NotInvariant,
  DegenerateSystem,
  NotSymmetric,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception thrown by every library entry point. The code identifies the
/// contract that was violated; what() carries a human-readable explanation.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace dtt
