#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psbck {

// Stable codes surfaced by the CLI (`error[<code>]`) and in JSON reports.
enum class ErrorCode {
  kInvalidAlgebra,
  kInvalidMap,
  kUnboundedAlgebra,
  kCarrierTooLarge,
  kParentMismatch,
  kGlivenkoRequired,
  kWellDefinednessFailure,
  kNotNormal,
  kNotVds,
  kSurjectivityRequired,
  kKernelContainmentViolated,
  kPPRequired,
  kNotFLw,
  kNotSmarandache,
  kParseError,
  kUsage,
};

std::string_view error_code_name(ErrorCode code);

class WorkbenchError : public std::runtime_error {
 public:
  WorkbenchError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace psbck
