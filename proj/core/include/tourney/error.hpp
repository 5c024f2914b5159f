#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tourney {

/// Input violates the tournament axioms (asymmetry / connexity) or a
/// structural precondition such as a size mismatch.
class InvalidTournament : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponential enumeration refused because the input exceeds a size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The exact game solver reached a state that valid input cannot produce.
class SolverError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax error in a tournament file. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tourney
