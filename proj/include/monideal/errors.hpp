#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two objects from different ambient rings were combined.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

/// An exponent arithmetic step left the representable range.
class ExponentOverflow : public Error {
public:
  using Error::Error;
};

/// A configured resource cap would be exceeded.  `cap_name()` identifies
/// which limit fired so callers can raise it deliberately.
class CapExceeded : public Error {
public:
  CapExceeded(std::string cap_name, const std::string& what)
      : Error(what), cap_name_(std::move(cap_name)) {}
  const std::string& cap_name() const noexcept { return cap_name_; }

private:
  std::string cap_name_;
};

/// A precondition on operation arguments was violated.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed textual input; carries a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A mathematical identity the implementation relies on failed to hold.
/// Seeing this means a bug, not a bad input.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace monideal
