#pragma once

#include <stdexcept>
#include <string>

namespace baire
{
  /// Malformed input: bad syntax, unknown symbols, alphabet mismatches,
  /// violated preconditions. The CLI maps these to exit status 2.
  class InputError : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// OAF / word syntax error. `line` is 1-based, 0 when not tied to a line.
  class ParseError : public InputError
  {
  public:
    ParseError(std::size_t line, const std::string& what)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
  };

  /// A postcondition that the library checks before returning did not hold.
  /// Exit status 3 in the CLI.
  class InvariantViolation : public std::logic_error
  {
  public:
    using std::logic_error::logic_error;
  };

  /// A materialization or search exceeded its configured size cap.
  class CapacityError : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };
}
