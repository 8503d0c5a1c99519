#pragma once

#include <stdexcept>
#include <string>

namespace netvuln {

/// Invalid argument or configuration value.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value handed between stages does not match what produced it
/// (plan vs graph fingerprint, malformed trace, out-of-range index).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input violates a structural rule (self-loop, duplicate edge, empty graph).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netvuln
