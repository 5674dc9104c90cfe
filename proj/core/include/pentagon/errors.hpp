#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pentagon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by exact inversion; carries the rank that was found.
class SingularMatrix : public Error {
 public:
  SingularMatrix(const std::string& what, std::size_t rank)
      : Error(what + " (rank " + std::to_string(rank) + ")"), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

class MissingHopfData : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class ClosureViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; the message starts with a JSON path such as `$.entries[3].value`.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace pentagon
