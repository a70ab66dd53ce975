#include "zariski/errors.hpp"

namespace zariski {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::Inhomogeneous: return "inhomogeneous";
    case ErrorCode::UnknownSymbol: return "unknown-symbol";
    case ErrorCode::ZeroPolynomial: return "zero-polynomial";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::NotIrreducible: return "not-irreducible";
    case ErrorCode::UndefinedResultant: return "undefined-resultant";
    case ErrorCode::CommonComponent: return "shared-component";
    case ErrorCode::NotReduced: return "not-reduced";
    case ErrorCode::NotSmooth: return "not-smooth";
    case ErrorCode::SmoothnessUncertified: return "smoothness-uncertified";
    case ErrorCode::RetriesExhausted: return "retries-exhausted";
    case ErrorCode::NotDivisible: return "n-does-not-divide";
    case ErrorCode::NotTestable: return "class-not-testable-at-this-multiple";
    case ErrorCode::NotInTheta: return "not-in-theta";
    case ErrorCode::SweepGuard: return "sweep-guard-exceeded";
    case ErrorCode::NMismatch: return "n-mismatch";
    case ErrorCode::OracleUnavailable: return "oracle-unavailable";
    case ErrorCode::UnavailableTriple: return "unavailable-triple";
    case ErrorCode::OutOfScope: return "out-of-scope";
    case ErrorCode::PredictionMismatch: return "prediction-mismatch";
    case ErrorCode::TypeVerification: return "type-verification-failure";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code), message_(msg) {}

int exit_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSmooth:
    case ErrorCode::SmoothnessUncertified:
    case ErrorCode::RetriesExhausted:
    case ErrorCode::PredictionMismatch:
    case ErrorCode::TypeVerification:
    case ErrorCode::Internal:
    case ErrorCode::OracleUnavailable:
      return 4;
    default:
      return 3;
  }
}

void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace zariski
