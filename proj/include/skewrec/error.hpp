#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewrec {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  ContextMismatch,
  ZeroDivisor,
  NoRepresentative,
  DegenerateFrame,
  UnsupportedDegree,
  NoRootsFound,
  InternalError,
  DimensionMismatch,
  Singular,
  NoSolution,
  SingularU,
  LamViolation,
  UnsupportedOrder,
  ValidationError,
  PreconditionViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position. Line is 0 when the input
/// was a single literal rather than a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace skewrec
