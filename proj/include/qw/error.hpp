#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments violate a precondition (shape mismatch, out-of-range entry, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the domain of the operation,
// e.g. asking for compatibility with a quantifier that is not downward closed.
class DomainError : public Error {
 public:
  using Error::Error;
};

// No scan strategy fits within the configured enumeration limit.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, SourcePos pos)
      : InvalidInput(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
        pos_(pos) {}

  const SourcePos& pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

}  // namespace qw
