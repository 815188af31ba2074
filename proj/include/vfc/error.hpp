#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vfc {

enum class ErrorCode {
  FieldMismatch,
  DimensionMismatch,
  InvalidArgument,
  InvalidComplex,
  WildBoundary,
  WildCover,
  SpanFailure,
  Precondition,
  Schema,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "field_mismatch";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InvalidComplex: return "invalid_complex";
    case ErrorCode::WildBoundary: return "wild_boundary";
    case ErrorCode::WildCover: return "wild_cover";
    case ErrorCode::SpanFailure: return "span_failure";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

/// Every failure the library reports carries a machine-readable code so the
/// CLI can map it onto an exit status and a JSON error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vfc
