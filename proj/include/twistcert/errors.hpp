#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcert {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSymplecticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModulusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised when a polynomial lies outside the supported factorization range.
class DegreeBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotReciprocalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Syntax or range error in a text form, with the byte offset of the offending
// token in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace twistcert
