#pragma once

#include <stdexcept>
#include <string>

namespace betti {

/// Raised when presentation text violates the grammar or names an unknown generator.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Raised when an enumeration exceeds its configured limits. Agnostic about
/// whether the index is infinite or merely large.
class LimitExceeded : public std::runtime_error {
public:
  explicit LimitExceeded(std::string message) : std::runtime_error(std::move(message)) {}
};

} // namespace betti
