#include "fuskit/error.hpp"

namespace fuskit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotNormal: return "NotNormal";
    case Errc::GradingInconsistency: return "GradingInconsistency";
    case Errc::PointedInput: return "PointedInput";
    case Errc::TypeExtractionFailure: return "TypeExtractionFailure";
    case Errc::DetectorDisagreement: return "DetectorDisagreement";
    case Errc::NotFibExtension: return "NotFibExtension";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotPointedPrecondition: return "NotPointedPrecondition";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::UnsupportedNonabelian: return "UnsupportedNonabelian";
    case Errc::AssertionFailure: return "AssertionFailure";
  }
  return "Unknown";
}

}  // namespace fuskit
