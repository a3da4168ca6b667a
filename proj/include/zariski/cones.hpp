#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/linalg.hpp"

namespace zariski {

// Coefficients with respect to a space's ordered basis.
using QVector = RationalVector;

/** Sorted, duplicate-free set of basis indices. */
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> indices);
  SupportSet(std::initializer_list<std::size_t> indices)
      : SupportSet(std::vector<std::size_t>(indices)) {}

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t index) const;
  bool is_subset_of(const SupportSet& other) const;
  SupportSet united_with(const SupportSet& other) const;

  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::size_t> indices_;  // strictly ascending
};

/** Orders by size first, then lexicographically on the index sequence. */
bool size_lex_less(const SupportSet& a, const SupportSet& b);

/**
 * A finite-dimensional rational vector space with a distinguished basis and an
 * intersection product: the Gram matrix is symmetric and every off-diagonal
 * entry is nonnegative. Construct through validate_space.
 */
class IntersectionSpace {
 public:
  std::size_t dimension() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_[index]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /** Gram matrix of the subset's basis vectors, in ascending index order. */
  RationalMatrix restricted_matrix(const SupportSet& subset) const;

  friend IntersectionSpace validate_space(RationalMatrix matrix,
                                          std::vector<std::string> labels);

 private:
  IntersectionSpace(RationalMatrix matrix, std::vector<std::string> labels)
      : matrix_(std::move(matrix)), labels_(std::move(labels)) {}

  RationalMatrix matrix_;
  std::vector<std::string> labels_;
};

/**
 * Checks symmetry, nonnegative off-diagonal entries and label uniqueness.
 * Throws NotSymmetric, NegativeOffDiagonal, DuplicateLabel or
 * DimensionMismatch.
 */
IntersectionSpace validate_space(RationalMatrix matrix, std::vector<std::string> labels);

/** Same, with default labels e1..en. */
IntersectionSpace validate_space(RationalMatrix matrix);

/** Subspace spanned by the first k basis vectors, labels carried over. */
IntersectionSpace leading_subspace(const IntersectionSpace& space, std::size_t k);

/** Exact intersection product vᵀMw. */
Rational pairing(const IntersectionSpace& space, const QVector& v, const QVector& w);

/** Indices carrying a nonzero coefficient. */
SupportSet support(const QVector& v);

/** True iff every coefficient is >= 0; the zero vector is effective. */
bool is_effective(const QVector& v);

/** True iff M·w is effective. */
bool is_nef(const IntersectionSpace& space, const QVector& w);

/**
 * Nefness with respect to the subspace spanned by the subset: pairing(w, e_j)
 * >= 0 for every j in the subset. Requires support(w) ⊆ subset, otherwise
 * throws SupportNotContained.
 */
bool is_nef_on_subspace(const IntersectionSpace& space, const SupportSet& subset,
                        const QVector& w);

/** Componentwise maximum. */
QVector max_vectors(const QVector& v, const QVector& v2);

/**
 * Constructive dichotomy for a subset of basis vectors: when the restricted
 * pairing matrix is negative definite, returns nothing; otherwise returns a
 * nonzero effective q supported in the subset with pairing(q, e_j) >= 0 for
 * every subset index j. The witness is built from the largest negative
 * definite upper-left block M', as q' = -M'^{-1} A_1 padded with a single 1,
 * taking the subset's indices in ascending order.
 */
std::optional<QVector> find_effective_nef(const IntersectionSpace& space,
                                          const SupportSet& subset);

/**
 * All nonempty subsets of the ceiling whose restricted pairing matrix is
 * negative definite, sorted by size then lexicographically. Enumeration is
 * exponential in the ceiling size and refuses to run past the cap.
 */
std::vector<SupportSet> negative_definite_sublattice(const IntersectionSpace& space,
                                                     const SupportSet& ceiling,
                                                     std::size_t cap = 20);

}  // namespace zariski
