#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zariski {

// Root of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NegativeOffDiagonal : public Error {
 public:
  NegativeOffDiagonal(std::size_t row, std::size_t col)
      : Error("negative off-diagonal entry at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

class SupportNotContained : public Error {
 public:
  using Error::Error;
};

class MalformedProgram : public Error {
 public:
  using Error::Error;
};

class NotEffective : public Error {
 public:
  using Error::Error;
};

class NotQuasiEffective : public Error {
 public:
  using Error::Error;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

// Signals an implementation bug: the decomposition is unique, so exactly one
// candidate survives the exhaustive scan and this must never fire.
class UniquenessViolation : public Error {
 public:
  using Error::Error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

class NonIntegerCoefficient : public Error {
 public:
  using Error::Error;
};

class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

// Postcondition check failed inside the library itself.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zariski
