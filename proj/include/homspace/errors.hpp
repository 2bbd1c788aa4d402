#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homspace {

enum class ErrorCode {
  DomainError,
  Undetermined,
  IndexOutOfRange,
  InfiniteContribution,
  InconsistentSignature,
  DimensionMismatch,
  SignatureMismatch,
  ZeroVector,
  LimitVector,
  NotLimit,
  AlreadyOrthogonal,
  Degenerate,
  NotOrthogonal,
  Unsupported,
  WrongSignature,
  NotGMOrthogonal,
  ImproperMotion,
  AllVectorsDegenerate,
  InputNotOrthonormal,
  NoProjection,
  DimensionBound,
  UnclassifiableMeasure,
  Unconnectable,
  AntipodalAmbiguity,
  DegenerateTriangle,
  LimitSum,
  UnmeasurableAngle,
  OutOfDomain,
  Underdetermined,
  Inconsistent,
  NonConvergent,
  MalformedForm,
  InvalidParams,
  OrbitExplosion,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace homspace
