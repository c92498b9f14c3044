#pragma once

#include <stdexcept>
#include <string>

namespace truthlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax; position is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

}  // namespace truthlab
