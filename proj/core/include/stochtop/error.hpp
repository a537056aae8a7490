#pragma once

#include <stdexcept>
#include <string>

namespace stochtop {

/// Raised for malformed input, violated preconditions and bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a numeric computation cannot be certified (rank disagreement,
/// iteration budget exhausted, residual too large, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text codec; carries the 1-based line number of the offence.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stochtop
