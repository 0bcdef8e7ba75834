#include "ccc/error.hpp"

namespace ccc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kMixedRings: return "MixedRings";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kInvalidComposition: return "InvalidComposition";
    case ErrorCode::kInvalidLength: return "InvalidLength";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kQTooSmall: return "QTooSmall";
    case ErrorCode::kSOutOfRange: return "SOutOfRange";
    case ErrorCode::kWrongQ: return "WrongQ";
    case ErrorCode::kNoAdmissibleDelta: return "NoAdmissibleDelta";
    case ErrorCode::kTooFewWords: return "TooFewWords";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kMalformedCodeFile: return "MalformedCodeFile";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ccc
