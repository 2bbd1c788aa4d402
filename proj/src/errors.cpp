#include "homspace/errors.hpp"

namespace homspace {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Undetermined: return "Undetermined";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InfiniteContribution: return "InfiniteContribution";
    case ErrorCode::InconsistentSignature: return "InconsistentSignature";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::LimitVector: return "LimitVector";
    case ErrorCode::NotLimit: return "NotLimit";
    case ErrorCode::AlreadyOrthogonal: return "AlreadyOrthogonal";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::NotGMOrthogonal: return "NotGMOrthogonal";
    case ErrorCode::ImproperMotion: return "ImproperMotion";
    case ErrorCode::AllVectorsDegenerate: return "AllVectorsDegenerate";
    case ErrorCode::InputNotOrthonormal: return "InputNotOrthonormal";
    case ErrorCode::NoProjection: return "NoProjection";
    case ErrorCode::DimensionBound: return "DimensionBound";
    case ErrorCode::UnclassifiableMeasure: return "UnclassifiableMeasure";
    case ErrorCode::Unconnectable: return "Unconnectable";
    case ErrorCode::AntipodalAmbiguity: return "AntipodalAmbiguity";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::LimitSum: return "LimitSum";
    case ErrorCode::UnmeasurableAngle: return "UnmeasurableAngle";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::MalformedForm: return "MalformedForm";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OrbitExplosion: return "OrbitExplosion";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw GeometryError(code, message);
}

}  // namespace homspace
