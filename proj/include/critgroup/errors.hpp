#pragma once

#include <stdexcept>
#include <string>

namespace critgroup {

// Raised when an input exceeds an explicit size guard (oracles, float checks).
class UnsupportedSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text readers; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace critgroup
