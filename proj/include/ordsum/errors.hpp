#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordsum {

// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Input outside an operation's domain (non-number where a number is required, x < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// The interning budget or an exponent bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource"; }
};

// A closed-form ordinal-sum formula does not apply to this base (gap > 1 or
// the needed option is missing). Recoverable: callers fall back to exact recursion.
class PreconditionGap : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition_gap"; }
};

class IllegalMove : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "illegal_move"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), message_(message), offset_(offset) {}

  const char* kind() const noexcept override { return "parse"; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

}  // namespace ordsum
