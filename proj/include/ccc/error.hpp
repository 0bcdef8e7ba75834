#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccc {

enum class ErrorCode {
  kNotPrime,
  kInvalidModulus,
  kReducibleModulus,
  kMixedFields,
  kDivisionByZero,
  kMixedRings,
  kNotAUnit,
  kInvalidComposition,
  kInvalidLength,
  kLengthMismatch,
  kInvalidParams,
  kQTooSmall,
  kSOutOfRange,
  kWrongQ,
  kNoAdmissibleDelta,
  kTooFewWords,
  kInstanceTooLarge,
  kMalformedCodeFile,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccc
