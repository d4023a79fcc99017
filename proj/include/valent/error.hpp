#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valent {

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  DuplicateEdge,
  InvalidSize,
  MalformedGraph6,
  UnsupportedSize,
  LengthMismatch,
  ZeroVector,
  EmptyVector,
  NotSymmetric,
  NoConvergence,
  TooLarge,
  UnequalValues,
  SameVertex,
  EdgeTouchesSupport,
  NotAnEdge,
  NotOppositeValues,
  ZeroEndpoint,
  NotASoftSquare,
  EdgeAlreadyPresent,
  UnbalancedSupport,
  NotAlternatePerfect,
  EdgeCollision,
  MissingEdge,
  NotBivalentAlphabet,
  NotTrivalentAlphabet,
  NotACertificate,
  NotATree,
  NotPerfectMatching,
  MatchingUnavailable,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnequalValues: return "UnequalValues";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::EdgeTouchesSupport: return "EdgeTouchesSupport";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotOppositeValues: return "NotOppositeValues";
    case ErrorCode::ZeroEndpoint: return "ZeroEndpoint";
    case ErrorCode::NotASoftSquare: return "NotASoftSquare";
    case ErrorCode::EdgeAlreadyPresent: return "EdgeAlreadyPresent";
    case ErrorCode::UnbalancedSupport: return "UnbalancedSupport";
    case ErrorCode::NotAlternatePerfect: return "NotAlternatePerfect";
    case ErrorCode::EdgeCollision: return "EdgeCollision";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::NotBivalentAlphabet: return "NotBivalentAlphabet";
    case ErrorCode::NotTrivalentAlphabet: return "NotTrivalentAlphabet";
    case ErrorCode::NotACertificate: return "NotACertificate";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorCode::MatchingUnavailable: return "MatchingUnavailable";
  }
  return "Unknown";
}

/// Every precondition violation in the library is reported as an Error
/// carrying a machine-readable code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = {}) {
  throw Error(code, detail);
}

}  // namespace valent
