#pragma once

#include <stdexcept>
#include <string>

namespace cscrystal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank out of range, or a root/letter index outside 1..r.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (negative coefficient, bad permutation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Shape is not a partition, or not strictly decreasing where that is required.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Filling violates the semistandard conditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Entry outside 1..r+1.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cscrystal
