#include "conjp/error.hpp"

namespace conjp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OverlappingCircles: return "OverlappingCircles";
    case ErrorCode::HoleOutsideOuter: return "HoleOutsideOuter";
    case ErrorCode::TooFewBoundaryComponents: return "TooFewBoundaryComponents";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::PointNotInterior: return "PointNotInterior";
    case ErrorCode::NonRealPairing: return "NonRealPairing";
    case ErrorCode::ProbeTooCloseToBoundary: return "ProbeTooCloseToBoundary";
    case ErrorCode::NotCertifiedExtendible: return "NotCertifiedExtendible";
    case ErrorCode::AllFieldsTinyAtPoint: return "AllFieldsTinyAtPoint";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::WrongZeroCount: return "WrongZeroCount";
    case ErrorCode::ZeroNearBoundary: return "ZeroNearBoundary";
    case ErrorCode::ResidueCheckFailed: return "ResidueCheckFailed";
    case ErrorCode::CommonZeroFound: return "CommonZeroFound";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace conjp
