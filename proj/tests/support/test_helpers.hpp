#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "zariski/linalg.hpp"
#include "zariski/rational.hpp"

namespace zariski::testing {

// Deterministic RNG so failures reproduce; reseed per test case.
inline std::mt19937& rng() {
  static std::mt19937 engine(20230817u);
  return engine;
}

inline void reseed(unsigned seed) { rng().seed(seed); }

// Entry distribution used across the randomized suites: numerators in
// [-5, 5], denominators in {1, 2, 3}.
inline Rational random_rational(std::mt19937& engine) {
  std::uniform_int_distribution<int> numerator(-5, 5);
  std::uniform_int_distribution<int> denominator(1, 3);
  return Rational(numerator(engine), denominator(engine));
}

inline Rational random_nonnegative_rational(std::mt19937& engine) {
  std::uniform_int_distribution<int> numerator(0, 5);
  std::uniform_int_distribution<int> denominator(1, 3);
  return Rational(numerator(engine), denominator(engine));
}

inline RationalMatrix random_matrix(std::mt19937& engine, std::size_t rows,
                                    std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(engine);
  }
  return m;
}

inline RationalMatrix random_symmetric_matrix(std::mt19937& engine, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = random_rational(engine);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_rational(engine);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

// Symmetric, nonnegative off-diagonal, strictly diagonally dominant with a
// negative diagonal; such matrices are always negative definite.
inline RationalMatrix random_dominant_negative_definite(std::mt19937& engine,
                                                        std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_nonnegative_rational(engine);
      m(j, i) = m(i, j);
    }
  }
  std::uniform_int_distribution<int> slack(1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    Rational off_sum;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off_sum += m(i, j);
    }
    m(i, i) = -off_sum - slack(engine);
  }
  return m;
}

// Symmetric with nonnegative off-diagonal entries; the diagonal may take any
// sign, so the signature varies across draws.
inline RationalMatrix random_intersection_matrix(std::mt19937& engine, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = random_rational(engine);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_nonnegative_rational(engine);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

inline RationalVector random_vector(std::mt19937& engine, std::size_t n) {
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_rational(engine);
  return v;
}

inline RationalVector random_effective_vector(std::mt19937& engine, std::size_t n) {
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_nonnegative_rational(engine);
  return v;
}

inline RationalMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int entry : row) m(i, j++) = entry;
    ++i;
  }
  return m;
}

inline RationalVector int_vector(std::initializer_list<int> entries) {
  RationalVector v(entries.size());
  std::size_t i = 0;
  for (int entry : entries) v[i++] = entry;
  return v;
}

// Fixture shorthand: vec("1/2 1") -> (1/2, 1).
inline RationalVector vec(const std::string& text) {
  return RationalVector(parse_rational_list(text));
}

// Cofactor expansion along the first row; exponential, oracle use only.
inline Rational cofactor_determinant(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational total;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    const Rational term = a(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace zariski::testing
