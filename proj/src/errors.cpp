#include "trigfit/errors.hpp"

namespace trigfit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonotonePoints: return "NonMonotonePoints";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DegenerateSet: return "DegenerateSet";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::Breakdown: return "Breakdown";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::ZeroChord: return "ZeroChord";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InputFormat: return "InputFormat";
  }
  return "Unknown";
}

}  // namespace trigfit
