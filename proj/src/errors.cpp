#include "wfdim/errors.hpp"

namespace wfdim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotInZ: return "NotInZ";
    case ErrorKind::NoSimpleRoots: return "NoSimpleRoots";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wfdim
