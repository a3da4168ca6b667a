#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/rational.hpp"

namespace zariski {

/** Dense vector over the rationals. */
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t size) : entries_(size) {}
  RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static RationalVector zero(std::size_t size) { return RationalVector(size); }
  static RationalVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& scale);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) {
    a += b;
    return a;
  }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) {
    a -= b;
    return a;
  }
  friend RationalVector operator*(const Rational& scale, RationalVector v) {
    v *= scale;
    return v;
  }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RationalVector& a, const RationalVector& b);

/** Dense row-major matrix over the rationals. */
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }
  Rational& operator()(std::size_t row, std::size_t col) {
    return entries_[row * cols_ + col];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  RationalVector row(std::size_t index) const;
  RationalVector column(std::size_t index) const;
  void swap_rows(std::size_t a, std::size_t b);

  /** Upper-left k-by-k block. */
  RationalMatrix leading_principal(std::size_t k) const;

  /** Principal submatrix on the given index list; indices must be ascending. */
  RationalMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;

  friend RationalVector operator*(const RationalMatrix& m, const RationalVector& x);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;  // row-major, rows_ * cols_ entries
};

/**
 * Solves a x = rhs exactly by Gaussian elimination. Throws SingularMatrix when
 * the matrix is not invertible and DimensionMismatch on shape violations.
 */
RationalVector solve_linear_system(const RationalMatrix& a, const RationalVector& rhs);

/** Exact inverse via Gauss-Jordan elimination. Throws SingularMatrix. */
RationalMatrix invert(const RationalMatrix& a);

/**
 * Exact determinant by fraction-free (Bareiss) elimination with row swaps.
 * The 0-by-0 determinant is 1.
 */
Rational determinant(const RationalMatrix& a);

/**
 * Sylvester test: a symmetric matrix is negative definite exactly when the
 * k-th leading principal minor has sign (-1)^k for every k. The empty matrix
 * counts as negative definite. Throws NotSymmetric on asymmetric input.
 */
bool is_negative_definite(const RationalMatrix& a);

}  // namespace zariski
