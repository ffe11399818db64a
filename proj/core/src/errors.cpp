#include "mps/errors.hpp"

namespace mps {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMps: return "NotMps";
    case ErrorCode::NotHermitianUnitary: return "NotHermitianUnitary";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TrivialMatrix: return "TrivialMatrix";
    case ErrorCode::DegenerateSpec: return "DegenerateSpec";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotHadamard: return "NotHadamard";
    case ErrorCode::NotConference: return "NotConference";
    case ErrorCode::NotHermitianConference: return "NotHermitianConference";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::DesignInvalid: return "DesignInvalid";
    case ErrorCode::ParameterMismatch: return "ParameterMismatch";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::BlockTooSmall: return "BlockTooSmall";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotInRange: return "NotInRange";
    case ErrorCode::NonConstantRowSum: return "NonConstantRowSum";
    case ErrorCode::WrongRatio: return "WrongRatio";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mps
