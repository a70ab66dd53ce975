#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

enum class ErrorCode {
  InvalidInput,        // malformed data handed to a public operation
  Syntax,              // polynomial text could not be parsed
  Inhomogeneous,
  UnknownSymbol,
  ZeroPolynomial,
  FieldMismatch,       // elements of two different number fields mixed
  NotIrreducible,      // proposed minimal polynomial factors
  UndefinedResultant,
  CommonComponent,
  NotReduced,
  NotSmooth,
  SmoothnessUncertified,
  RetriesExhausted,
  NotDivisible,        // n does not divide the local data
  NotTestable,         // class has a non-integral multiple of the reference divisor
  NotInTheta,
  SweepGuard,
  NMismatch,
  OracleUnavailable,
  UnavailableTriple,
  OutOfScope,
  PredictionMismatch,
  TypeVerification,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg);
  ErrorCode code() const { return code_; }
  // Text without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// CLI exit status for an error: 3 for bad input, 4 for failed certification.
int exit_status(ErrorCode c);

[[noreturn]] void fail(ErrorCode code, const std::string& msg);

}  // namespace zariski
