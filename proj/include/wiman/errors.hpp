#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wiman {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotInSubring : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed; position is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class OrbitBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class NotUnique : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInE0 : public Error {
 public:
  using Error::Error;
};

class InconsistentExtension : public Error {
 public:
  using Error::Error;
};

class NotEquivariant : public Error {
 public:
  using Error::Error;
};

class NotO0Linear : public Error {
 public:
  using Error::Error;
};

class MatrixMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

}  // namespace wiman
