#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flexcore {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Thrown by the expression front-end. position is a 0-based byte offset
// into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Binary operation on values over different variable universes.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

// The zero polynomial has no multidegree.
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

}  // namespace flexcore
