#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regionkit {

/// Malformed or contract-violating input (bad vertex index, overlapping regions, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not conform to a supported format. `offset` is the byte
/// position of the first offending character.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The instance exceeds an explicit solver or oracle size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A builder produced an object that failed its own post-construction check.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace regionkit
