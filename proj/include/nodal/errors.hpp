#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nodal {

// Base of every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A degree or matrix-size guard was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A randomly drawn object (linear form, example) was not general enough.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

// All reseeding attempts produced non-general objects.
class GenericityExhausted : public Error {
 public:
  using Error::Error;
};

// A Hilbert table never reached a constant plateau of the required width.
class NoPlateau : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), detail_(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(column) + ": " + what;
    return out;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Two routes that must agree did not. Always an implementation bug.
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nodal
