#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropskel {

enum class ErrorCode {
  DimensionMismatch,
  EmptyInput,
  PointNotInPolyhedron,
  PointNotInSupport,
  NotPointed,
  NotAFan,
  UnknownCone,
  UnknownCell,
  TooFewTerms,
  OrbitPointUnsupported,
  NotEquidimensional,
  MissingStratumData,
  BasePointMismatch,
  DataInconsistent,
  MissingInclusion,
  NotGraded,
  IndexInfinite,
  ParseError,
  InvalidInput,
  InternalInconsistency,
};

/// Stable upper-case name used in reports and JSON, e.g. "TOO_FEW_TERMS".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropskel
