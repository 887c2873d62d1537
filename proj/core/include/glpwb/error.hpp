#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glpwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations and values outside the supported segment.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Cap on recursion depth and iteration counts; read once from GLPWB_MAX_DEPTH.
std::size_t max_depth();

}  // namespace glpwb
