#include "zariski/linalg.hpp"

#include <string>
#include <utility>

namespace zariski {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw DimensionMismatch(what);
}

}  // namespace

RationalVector RationalVector::unit(std::size_t size, std::size_t index) {
  RationalVector v(size);
  v[index] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  for (const Rational& entry : entries_) {
    if (entry != 0) return false;
  }
  return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  require(size() == other.size(), "vector sizes differ in addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  require(size() == other.size(), "vector sizes differ in subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale) {
  for (Rational& entry : entries_) entry *= scale;
  return *this;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require(a.size() == b.size(), "vector sizes differ in dot product");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "ragged matrix initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalVector RationalMatrix::row(std::size_t index) const {
  RationalVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(index, j);
  return r;
}

RationalVector RationalMatrix::column(std::size_t index) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, index);
  return c;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RationalMatrix RationalMatrix::leading_principal(std::size_t k) const {
  require(k <= rows_ && k <= cols_, "leading block exceeds matrix size");
  RationalMatrix block(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) block(i, j) = (*this)(i, j);
  }
  return block;
}

RationalMatrix RationalMatrix::principal_submatrix(
    const std::vector<std::size_t>& indices) const {
  const std::size_t k = indices.size();
  RationalMatrix block(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    require(indices[i] < rows_ && indices[i] < cols_, "submatrix index out of range");
    require(i == 0 || indices[i - 1] < indices[i], "submatrix indices must ascend");
    for (std::size_t j = 0; j < k; ++j) block(i, j) = (*this)(indices[i], indices[j]);
  }
  return block;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& x) {
  require(m.cols() == x.size(), "matrix-vector size mismatch");
  RationalVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational sum;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * x[j];
    y[i] = sum;
  }
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.cols() == b.rows(), "matrix-matrix size mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

RationalVector solve_linear_system(const RationalMatrix& a, const RationalVector& rhs) {
  require(a.is_square(), "solve needs a square matrix");
  require(a.rows() == rhs.size(), "right-hand side length mismatch");
  const std::size_t n = a.rows();

  RationalMatrix work = a;
  RationalVector b = rhs;

  // Forward elimination; exact arithmetic needs no magnitude pivoting, the
  // first nonzero entry in the column is enough and keeps runs deterministic.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    work.swap_rows(col, pivot);
    std::swap(b[col], b[pivot]);

    for (std::size_t i = col + 1; i < n; ++i) {
      if (work(i, col) == 0) continue;
      const Rational factor = work(i, col) / work(col, col);
      work(i, col) = 0;
      for (std::size_t j = col + 1; j < n; ++j) work(i, j) -= factor * work(col, j);
      b[i] -= factor * b[col];
    }
  }

  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational sum = b[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= work(i, j) * x[j];
    x[i] = sum / work(i, i);
  }
  return x;
}

RationalMatrix invert(const RationalMatrix& a) {
  require(a.is_square(), "only square matrices are invertible");
  const std::size_t n = a.rows();

  RationalMatrix work = a;
  RationalMatrix inverse = RationalMatrix::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    work.swap_rows(col, pivot);
    inverse.swap_rows(col, pivot);

    const Rational scale = Rational(1) / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inverse(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col) == 0) continue;
      const Rational factor = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= factor * work(col, j);
        inverse(i, j) -= factor * inverse(col, j);
      }
    }
  }
  return inverse;
}

Rational determinant(const RationalMatrix& a) {
  require(a.is_square(), "determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);

  RationalMatrix work = a;
  Rational sign(1);
  Rational previous_pivot(1);

  // Bareiss condensation: every entry of step k is a (k+1)x(k+1) minor of the
  // row-swapped input, so the divisions below are exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (work(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && work(swap, k) == 0) ++swap;
      if (swap == n) return Rational(0);
      work.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        work(i, j) = (work(i, j) * work(k, k) - work(i, k) * work(k, j)) / previous_pivot;
      }
    }
    previous_pivot = work(k, k);
  }
  return sign * work(n - 1, n - 1);
}

bool is_negative_definite(const RationalMatrix& a) {
  require(a.is_square(), "definiteness needs a square matrix");
  if (!a.is_symmetric()) throw NotSymmetric("matrix is not symmetric");

  for (std::size_t k = 1; k <= a.rows(); ++k) {
    const Rational minor = determinant(a.leading_principal(k));
    // (-1)^k * minor > 0
    if (k % 2 == 0 ? minor <= 0 : minor >= 0) return false;
  }
  return true;
}

}  // namespace zariski
