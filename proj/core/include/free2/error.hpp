#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace free2 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word expression. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An integer (exponent or template parameter) left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An expansion would produce more letters than the configured cap.
class LengthCapError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace free2
