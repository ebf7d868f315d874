#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hunt {

/// Malformed text input (graph or strategy files). Carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine refused to run because its input exceeds the
/// configured size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hunt
