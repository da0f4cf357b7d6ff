#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfdim {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  DegreeTooSmall,
  IndexOutOfRange,
  ZeroScale,
  PoleAtPoint,
  NotDivisible,
  NotInZ,
  NoSimpleRoots,
  HypothesisViolated,
  CoincidentPoints,
  InvalidArgument,
  ParseError,
  RouteDisagreement,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) raise(kind, what);
}

}  // namespace wfdim
