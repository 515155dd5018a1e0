#include "skewrec/error.hpp"

namespace skewrec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NoRepresentative: return "NoRepresentative";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NoRootsFound: return "NoRootsFound";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::SingularU: return "SingularU";
    case ErrorCode::LamViolation: return "LamViolation";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {
std::string with_position(const std::string& message, std::size_t line, std::size_t column) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column)
                               : "position " + std::to_string(column);
  return where + ": " + message;
}
}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorCode::ParseError, with_position(message, line, column)), line_(line), column_(column) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace skewrec
