#include "zariski/cones.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace zariski {

SupportSet::SupportSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool SupportSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool SupportSet::is_subset_of(const SupportSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

SupportSet SupportSet::united_with(const SupportSet& other) const {
  std::vector<std::size_t> merged;
  merged.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  SupportSet result;
  result.indices_ = std::move(merged);
  return result;
}

bool size_lex_less(const SupportSet& a, const SupportSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

std::optional<std::size_t> IntersectionSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

RationalMatrix IntersectionSpace::restricted_matrix(const SupportSet& subset) const {
  return matrix_.principal_submatrix(subset.indices());
}

IntersectionSpace validate_space(RationalMatrix matrix, std::vector<std::string> labels) {
  if (!matrix.is_square()) throw DimensionMismatch("intersection matrix must be square");
  if (labels.size() != matrix.rows()) {
    throw DimensionMismatch("label count does not match matrix dimension");
  }
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = i + 1; j < matrix.cols(); ++j) {
      if (matrix(i, j) != matrix(j, i)) throw NotSymmetric("intersection matrix is not symmetric");
    }
  }
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (i != j && matrix(i, j) < 0) throw NegativeOffDiagonal(i, j);
    }
  }
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) throw DuplicateLabel("duplicate basis label \"" + label + "\"");
  }
  return IntersectionSpace(std::move(matrix), std::move(labels));
}

IntersectionSpace validate_space(RationalMatrix matrix) {
  std::vector<std::string> labels;
  labels.reserve(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return validate_space(std::move(matrix), std::move(labels));
}

IntersectionSpace leading_subspace(const IntersectionSpace& space, std::size_t k) {
  if (k > space.dimension()) throw DimensionMismatch("leading subspace larger than the space");
  RationalMatrix block = space.matrix().leading_principal(k);
  std::vector<std::string> labels(space.labels().begin(), space.labels().begin() + k);
  return validate_space(std::move(block), std::move(labels));
}

Rational pairing(const IntersectionSpace& space, const QVector& v, const QVector& w) {
  if (v.size() != space.dimension() || w.size() != space.dimension()) {
    throw DimensionMismatch("vector length does not match the space dimension");
  }
  return dot(v, space.matrix() * w);
}

SupportSet support(const QVector& v) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) indices.push_back(i);
  }
  return SupportSet(std::move(indices));
}

bool is_effective(const QVector& v) {
  for (const Rational& coefficient : v) {
    if (coefficient < 0) return false;
  }
  return true;
}

bool is_nef(const IntersectionSpace& space, const QVector& w) {
  if (w.size() != space.dimension()) {
    throw DimensionMismatch("vector length does not match the space dimension");
  }
  return is_effective(space.matrix() * w);
}

bool is_nef_on_subspace(const IntersectionSpace& space, const SupportSet& subset,
                        const QVector& w) {
  if (w.size() != space.dimension()) {
    throw DimensionMismatch("vector length does not match the space dimension");
  }
  if (!support(w).is_subset_of(subset)) {
    throw SupportNotContained("vector support is not contained in the subset");
  }
  const RationalVector products = space.matrix() * w;
  for (std::size_t j : subset) {
    if (j >= space.dimension()) throw DimensionMismatch("subset index out of range");
    if (products[j] < 0) return false;
  }
  return true;
}

QVector max_vectors(const QVector& v, const QVector& v2) {
  if (v.size() != v2.size()) throw DimensionMismatch("vector sizes differ in max");
  QVector result(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) result[i] = std::max(v[i], v2[i]);
  return result;
}

std::optional<QVector> find_effective_nef(const IntersectionSpace& space,
                                          const SupportSet& subset) {
  const RationalMatrix restricted = space.restricted_matrix(subset);
  if (is_negative_definite(restricted)) return std::nullopt;

  const auto& indices = subset.indices();
  QVector witness(space.dimension());

  if (restricted(0, 0) >= 0) {
    witness[indices[0]] = 1;
    return witness;
  }

  // Largest upper-left negative definite block, in the subset's ascending
  // index order. The block one size bigger exists and fails the Sylvester
  // test; that failure is what makes the padded witness work.
  std::size_t block_size = 0;
  for (std::size_t k = 1; k <= restricted.rows(); ++k) {
    const Rational minor = determinant(restricted.leading_principal(k));
    if (k % 2 == 0 ? minor <= 0 : minor >= 0) break;
    block_size = k;
  }
  // restricted(0,0) < 0, so 1 <= block_size < subset size.

  const RationalMatrix block = restricted.leading_principal(block_size);
  RationalVector next_column(block_size);
  for (std::size_t i = 0; i < block_size; ++i) next_column[i] = restricted(i, block_size);

  // q' = -M'^{-1} A_1; entries are >= 0 because the inverse of a negative
  // definite block with nonnegative off-diagonal entries is entrywise <= 0.
  const RationalVector head = solve_linear_system(block, next_column);
  for (std::size_t i = 0; i < block_size; ++i) witness[indices[i]] = -head[i];
  witness[indices[block_size]] = 1;
  return witness;
}

std::vector<SupportSet> negative_definite_sublattice(const IntersectionSpace& space,
                                                     const SupportSet& ceiling,
                                                     std::size_t cap) {
  if (ceiling.size() > cap) {
    throw DimensionCapExceeded("ceiling has " + std::to_string(ceiling.size()) +
                               " indices, cap is " + std::to_string(cap));
  }
  for (std::size_t index : ceiling) {
    if (index >= space.dimension()) throw DimensionMismatch("ceiling index out of range");
  }

  // Breadth-first by size. A set can only be negative definite if every
  // one-element-smaller subset is, so only survivors get extended; this prunes
  // the exponential scan hard in practice.
  std::vector<SupportSet> result;
  std::set<std::vector<std::size_t>> known;
  std::vector<SupportSet> frontier;

  for (std::size_t index : ceiling) {
    const SupportSet singleton{index};
    if (is_negative_definite(space.restricted_matrix(singleton))) {
      frontier.push_back(singleton);
      known.insert(singleton.indices());
    }
  }

  while (!frontier.empty()) {
    result.insert(result.end(), frontier.begin(), frontier.end());
    std::vector<SupportSet> next;
    for (const SupportSet& base : frontier) {
      for (std::size_t extension : ceiling) {
        if (extension <= base.indices().back()) continue;
        std::vector<std::size_t> candidate = base.indices();
        candidate.push_back(extension);

        bool co_atoms_definite = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size(); ++drop) {
          std::vector<std::size_t> smaller;
          for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != drop) smaller.push_back(candidate[i]);
          }
          if (!known.contains(smaller)) {
            co_atoms_definite = false;
            break;
          }
        }
        if (!co_atoms_definite) continue;

        SupportSet grown(candidate);
        if (is_negative_definite(space.restricted_matrix(grown))) {
          known.insert(grown.indices());
          next.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(result.begin(), result.end(), size_lex_less);
  return result;
}

}  // namespace zariski
