#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuskit {

// Every failure raised by the library carries one of these codes. The C API
// maps them one-to-one onto fuskit_status values.
enum class Errc {
  InvalidArgument = 1,
  ParseError,
  Overflow,
  FieldMismatch,
  DivisionByZero,
  ConvergenceFailure,
  IndexOutOfRange,
  SizeLimit,
  UnknownElement,
  NotNormal,
  GradingInconsistency,
  PointedInput,
  TypeExtractionFailure,
  DetectorDisagreement,
  NotFibExtension,
  NotClosed,
  NotPointedPrecondition,
  NotAssociative,
  UnsupportedNonabelian,
  AssertionFailure,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fuskit
