#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morsecert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or word input. `line()` is 1-based, or 0 when the
/// error is not tied to a line of text.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        _line(line) {}

  std::size_t line() const noexcept { return _line; }

 private:
  std::size_t _line;
};

/// A precondition of an operation does not hold for its arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search stopped before completing. Never a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace morsecert
