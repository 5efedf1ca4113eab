#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerion {

enum class ErrorCode {
  NotAGroup,
  TooLarge,
  ParseError,
  ConductorMismatch,
  LiftFailure,
  NotSolvable,
  InternalInconsistency,
  NoLift,
  DimensionMismatch,
  NotSubgroup,
  PrimeMismatch,
  NonRationalResult,
  NotNormal,
  NoExtensionFound,
  BadSpec,
};

std::string_view error_name(ErrorCode code);

/// Engine error. `what()` reads "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace brauerion
