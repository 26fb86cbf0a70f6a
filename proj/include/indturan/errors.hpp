#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indturan {

// Bad caller-supplied data: invalid vertex ids, malformed embeddings, specs
// that violate a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric parameter outside the range an operation accepts.
class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

// A structurally valid file that describes an invalid graph (self-loops,
// duplicate edges).
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// Malformed graph text. `offset` is the byte position where decoding failed.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace indturan
