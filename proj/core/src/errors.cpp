#include "qalg/errors.hpp"

namespace qalg {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::DivergentProduct: return "DivergentProduct";
    case ErrorKind::ModeError: return "ModeError";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NegativeAlpha: return "NegativeAlpha";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonRepresentableExponent: return "NonRepresentableExponent";
    case ErrorKind::NonzeroConstant: return "NonzeroConstant";
    case ErrorKind::ConstantNotRoot: return "ConstantNotRoot";
    case ErrorKind::IncompatibleDenominator: return "IncompatibleDenominator";
    case ErrorKind::NotSolvedForm: return "NotSolvedForm";
    case ErrorKind::UniquenessViolated: return "UniquenessViolated";
    case ErrorKind::MissingInitialValue: return "MissingInitialValue";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InfinitelyMany: return "InfinitelyMany";
    case ErrorKind::NeedsRamification: return "NeedsRamification";
    case ErrorKind::NoShiftingPart: return "NoShiftingPart";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotDivergentRegime: return "NotDivergentRegime";
    case ErrorKind::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonIntegerSigmaIndex: return "NonIntegerSigmaIndex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace qalg
