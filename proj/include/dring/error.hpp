#pragma once

#include <stdexcept>
#include <string>

namespace dring {

// Base class for all library errors.  `what()` carries a human-readable
// message; CLI/binding layers map subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input: bad expression syntax, inconsistent JSON spec,
// mismatched rings, violated preconditions.
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Expression syntax error with a position (0-based offset into the source).
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, size_t pos)
      : InputError(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

// A step/size budget was exhausted before the computation finished.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

}  // namespace dring
