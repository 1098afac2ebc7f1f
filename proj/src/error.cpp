#include "knotscope/error.hpp"

namespace knotscope {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedSyntax: return "MalformedSyntax";
    case ErrorCode::ArcLabelNotTwice: return "ArcLabelNotTwice";
    case ErrorCode::EmptyCode: return "EmptyCode";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::BandSelfLoop: return "BandSelfLoop";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::MixedSignGroup: return "MixedSignGroup";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ZeroDeterminantUnexpected: return "ZeroDeterminantUnexpected";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NegativeRank: return "NegativeRank";
    case ErrorCode::ImplicationViolated: return "ImplicationViolated";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotKnot: return "NotKnot";
    case ErrorCode::FileMissing: return "FileMissing";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::RowParseError: return "RowParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace knotscope
