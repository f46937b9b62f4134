#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynemb {

// Malformed text input; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input parses but violates a structural requirement (too few snapshots,
// no negatives available, edgeless graph for a neural embedder, ...).
class StructuralError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ShapeError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace dynemb
