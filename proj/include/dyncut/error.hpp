#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyncut {

enum class ErrorCode {
  vertex_exists,
  vertex_missing,
  vertex_not_isolated,
  edge_exists,
  edge_missing,
  invalid_delta,
  invalid_weight,
  self_loop,
  overlapping_groups,
  unknown_vertex,
  same_vertex,
  empty_graph,
  invalid_intermediate,
  internal_invariant_violation,
  vertex_set_mismatch,
  enumeration_too_large,
  invalid_mix,
  syntax_error,
  validation_error,
  verification_failed,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::vertex_exists: return "VertexExists";
    case ErrorCode::vertex_missing: return "VertexMissing";
    case ErrorCode::vertex_not_isolated: return "VertexNotIsolated";
    case ErrorCode::edge_exists: return "EdgeExists";
    case ErrorCode::edge_missing: return "EdgeMissing";
    case ErrorCode::invalid_delta: return "InvalidDelta";
    case ErrorCode::invalid_weight: return "InvalidWeight";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::overlapping_groups: return "OverlappingGroups";
    case ErrorCode::unknown_vertex: return "UnknownVertex";
    case ErrorCode::same_vertex: return "SameVertex";
    case ErrorCode::empty_graph: return "EmptyGraph";
    case ErrorCode::invalid_intermediate: return "InvalidIntermediate";
    case ErrorCode::internal_invariant_violation: return "InternalInvariantViolation";
    case ErrorCode::vertex_set_mismatch: return "VertexSetMismatch";
    case ErrorCode::enumeration_too_large: return "EnumerationTooLarge";
    case ErrorCode::invalid_mix: return "InvalidMix";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code;
/// callers that need to branch on the failure kind inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dyncut
