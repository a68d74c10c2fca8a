#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gluecat {

enum class ErrorCode {
  CycleDetected,
  DuplicateElement,
  UnknownElement,
  UnknownObject,
  SizeBudgetExceeded,
  BaseMismatch,
  NotSubcomplex,
  NotInner,
  MoveInvalid,
  NotComparable,
  NotAChain,
  OutOfRange,
  HypothesisFailed,
  NotAssociative,
  MissingIdentity,
  IllTypedComposite,
  NotCommuting,
  MissingPullback,
  MissingLimit,
  GapNotInBothClasses,
  NotFunctorial,
  ShapeMismatch,
  EdgeClassViolation,
  TilingViolation,
  UnsupportedType,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Library-wide exception. `detail()` carries a witness (an offending
/// element, cospan, hypothesis name, ...) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string detail = "") {
  throw Error(code, std::move(detail));
}

}  // namespace gluecat
