#ifndef NILCHAR_ERRORS_HPP
#define NILCHAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilchar {

/// A mathematical precondition of an operation was violated (CLI exit code 1).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CLI exit code 2). Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nilchar

#endif
