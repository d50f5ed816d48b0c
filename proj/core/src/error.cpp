#include "triaut/error.hpp"

namespace triaut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::VariableDependence: return "VariableDependence";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::NotUnitriangular: return "NotUnitriangular";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::LayerViolation: return "LayerViolation";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::NotInDerivedSubgroup: return "NotInDerivedSubgroup";
    case ErrorCode::SideConditionViolated: return "SideConditionViolated";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::UnreducedWord: return "UnreducedWord";
    case ErrorCode::WordInCyclicFactor: return "WordInCyclicFactor";
    case ErrorCode::UnsupportedIndices: return "UnsupportedIndices";
    case ErrorCode::TrivialInput: return "TrivialInput";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotElementary: return "NotElementary";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::Parse, "at byte " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

}  // namespace triaut
