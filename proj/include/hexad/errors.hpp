#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexad {

/// Malformed input text. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// An input violated a documented precondition (non-cocycle, non-closed form, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational cochain that was required to be a coboundary is not one.
class NotExact : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace hexad
