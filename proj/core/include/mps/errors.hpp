#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mps {

// Every domain failure raised by the library carries one of these codes.
// The CLI prints the code name and maps it to an exit status.
enum class ErrorCode {
  InvalidArgument,
  NotMps,
  NotHermitianUnitary,
  NotUnitary,
  IndexOutOfRange,
  TrivialMatrix,
  DegenerateSpec,
  OutOfRange,
  NotHadamard,
  NotConference,
  NotHermitianConference,
  NoRealRoot,
  DesignInvalid,
  ParameterMismatch,
  BadOrder,
  NotNormalizable,
  BlockTooSmall,
  StructureViolation,
  NotInRange,
  NonConstantRowSum,
  WrongRatio,
  TooLarge,
  Singular,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mps
