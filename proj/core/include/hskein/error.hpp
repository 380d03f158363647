#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hskein {

enum class ErrorCode {
  ZeroDenominator,
  BadEvaluationPoint,
  PoleAtPoint,
  SizeMismatch,
  DegreeZeroComponent,
  BadIndex,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  RankMismatch,
  NotDiagonal,
  BadFactorIndex,
  UnsupportedMixedTerm,
  BadParams,
  ParseError,
  Overflow,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can dispatch on the kind of failure instead of the text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hskein
