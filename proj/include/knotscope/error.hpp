#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotscope {

enum class ErrorCode {
  MalformedSyntax,
  ArcLabelNotTwice,
  EmptyCode,
  NonPlanar,
  InconsistentOrientation,
  BandSelfLoop,
  NonIntegerGenus,
  NotNested,
  NotParallel,
  NotSpecial,
  ImproperColoring,
  MixedSignGroup,
  PreconditionFailed,
  ZeroDeterminantUnexpected,
  NotSymmetrizable,
  NegativeRank,
  ImplicationViolated,
  NotAlternating,
  NotReduced,
  NotKnot,
  FileMissing,
  HeaderMismatch,
  RowParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace knotscope
