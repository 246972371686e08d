#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conjp {

enum class ErrorCode {
  InvalidArgument,
  OverlappingCircles,
  HoleOutsideOuter,
  TooFewBoundaryComponents,
  NTooSmall,
  GridMismatch,
  SyntaxError,
  UnknownIdentifier,
  PoleAtEvaluationPoint,
  IllConditioned,
  PointNotInterior,
  NonRealPairing,
  ProbeTooCloseToBoundary,
  NotCertifiedExtendible,
  AllFieldsTinyAtPoint,
  SolveFailed,
  WrongZeroCount,
  ZeroNearBoundary,
  ResidueCheckFailed,
  CommonZeroFound,
  TruncationInsufficient,
  ConfigInvalid,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure; `offset` is the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace conjp
