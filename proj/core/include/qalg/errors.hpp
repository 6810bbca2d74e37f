#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qalg {

enum class ErrorKind {
  NonIntegerExponent,
  DivergentProduct,
  ModeError,
  InexactDivision,
  NoConvergence,
  ZeroPolynomial,
  NegativeAlpha,
  EmptyInput,
  NonRepresentableExponent,
  NonzeroConstant,
  ConstantNotRoot,
  IncompatibleDenominator,
  NotSolvedForm,
  UniquenessViolated,
  MissingInitialValue,
  NotNormalized,
  InfinitelyMany,
  NeedsRamification,
  NoShiftingPart,
  NotApplicable,
  NotDivergentRegime,
  MaxStepsExceeded,
  SyntaxError,
  NonIntegerSigmaIndex,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace qalg
