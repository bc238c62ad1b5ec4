#pragma once

#include <stdexcept>
#include <string>

namespace pkit {

enum class ErrorKind {
  AntisymmetryViolation,
  UnknownElement,
  UnknownAtom,
  UnknownPart,
  ArityMismatch,
  SizeLimit,
  FragmentViolation,
  AxiomFailure,
  ValidationInconclusive,
  NotExpressible,
  NotClosedDownset,
  NotClosedUpset,
  NotIdeal,
  NotFilter,
  NotALattice,
  NotDistributive,
  ParseError,
  SearchExhausted,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace pkit
