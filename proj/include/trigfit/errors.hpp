#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigfit {

enum class ErrorCode {
  NonMonotonePoints,
  OutOfDomain,
  NonPositiveWeight,
  DegenerateSet,
  LengthMismatch,
  DimensionMismatch,
  ZeroPivot,
  SingularSystem,
  Breakdown,
  DegreeTooLarge,
  GridTooSmall,
  ZeroChord,
  RankDeficient,
  InvalidArgument,
  InputFormat,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the
// CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trigfit
