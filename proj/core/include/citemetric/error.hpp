#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace citemetric {

enum class ErrorCode {
  EmptyKey,
  MalformedLine,
  UnknownClass,
  ArithmeticOverflow,
  UndefinedIndex,
  InvalidConfig,
  EmptyInput,
  InsufficientData,
  ZeroVariance,
  LengthMismatch,
  OutOfRange,
  InvalidParams,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A parse failure tied to a 1-based input line.
class LineError : public Error {
 public:
  LineError(ErrorCode code, std::size_t line, const std::string& reason)
      : Error(code, "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace citemetric
