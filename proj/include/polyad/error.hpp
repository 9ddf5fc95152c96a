#pragma once

#include <stdexcept>
#include <string>

namespace polyad {

// Domain-level failure: invalid structures, mismatched alphabets, carrier
// violations, axiom failures on finite tables.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word syntax failure. position() is a 1-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polyad
