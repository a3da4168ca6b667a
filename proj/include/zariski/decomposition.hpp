#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zariski/cones.hpp"
#include "zariski/errors.hpp"

namespace zariski {

/**
 * v = positive + negative with: positive nef, negative effective, positive
 * orthogonal to every basis vector in support(negative), and the pairing
 * matrix restricted to that support negative definite. For effective v the
 * positive part is effective as well; quasi-effective inputs can break that
 * last property but nothing else.
 */
struct ZariskiDecomposition {
  QVector positive;
  QVector negative;
};

/**
 * One round of the iterative algorithm: the subspace it worked on, the
 * effective increment split off, and the still-effective remainder.
 */
struct TraceStep {
  SupportSet subspace;
  QVector increment;
  QVector remainder;
};

/** Subspaces grow strictly; increments sum to the final negative part. */
struct AlgorithmTrace {
  std::vector<TraceStep> steps;
};

/** Per-condition verdicts for a candidate decomposition of v. */
struct DecompositionReport {
  bool reconstructs = false;              // v == p + n
  bool positive_nef = false;              // condition 1
  bool negative_effective = false;        // condition 2
  bool orthogonal = false;                // condition 3: p . e = 0 on support(n)
  bool support_negative_definite = false; // condition 4
  bool positive_effective = false;        // addendum, expected for effective v

  bool all_conditions() const {
    return reconstructs && positive_nef && negative_effective && orthogonal &&
           support_negative_definite;
  }

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

/**
 * One-shot construction: the positive part is the coordinatewise largest
 * vector of the polytope {0 <= x <= v, M x >= 0}, found by maximizing the
 * coordinate sum with the exact simplex. Throws NotEffective on a negative
 * input coefficient.
 */
ZariskiDecomposition decompose_direct(const IntersectionSpace& space, const QVector& v);

/**
 * Iterative construction. Starting from the basis vectors pairing negatively
 * with v, each round solves the restricted Gram system, subtracts the
 * resulting increment and enlarges the subspace by the basis vectors still
 * pairing negatively, until the remainder is nef. Nef input yields an empty
 * trace. Throws NotEffective.
 */
std::pair<ZariskiDecomposition, AlgorithmTrace> decompose_zariski(
    const IntersectionSpace& space, const QVector& v);

/**
 * Independent brute-force construction for cross-checking the other two.
 * Scans the empty set plus every negative definite subset S of support(v) in
 * size-lexicographic order, solves the linear system fixing x_j = v_j off S
 * and pairing(x, e_j) = 0 on S, and accepts S when the resulting parts pass
 * all four conditions with support(v - x) equal to S. Exactly one subset is
 * accepted; any other count throws UniquenessViolation, which signals an
 * implementation bug. Throws NotEffective, and DimensionCapExceeded when the
 * space dimension exceeds the cap.
 */
ZariskiDecomposition decompose_oracle(const IntersectionSpace& space, const QVector& v,
                                      std::size_t dimension_cap = 12);

/** Checks every condition of a candidate split v = p + n. */
DecompositionReport verify_decomposition(const IntersectionSpace& space, const QVector& v,
                                         const QVector& p, const QVector& n);

/** True iff M v = M v2, i.e. v and v2 pair equally with every vector. */
bool is_numerically_equivalent(const IntersectionSpace& space, const QVector& v,
                               const QVector& v2);

/**
 * True iff w pairs nonnegatively with every nef vector; decided exactly as
 * the existence of an effective y with M y = M w, the dual description of the
 * same cone.
 */
bool is_quasi_effective(const IntersectionSpace& space, const QVector& w);

/**
 * Decomposition of a quasi-effective w: an effective y numerically equivalent
 * to w is decomposed and the numerically trivial difference w - y is folded
 * into the positive part. The negative part does not depend on the choice of
 * y. Throws NotQuasiEffective.
 */
ZariskiDecomposition decompose_quasi_effective(const IntersectionSpace& space,
                                               const QVector& w);

/**
 * The rank-k staircase pattern space and the space obtained from it by the
 * column-then-row operations col/row 2i += col/row 1 - col/row 2 for
 * i = 2..k. Both are valid 2k-dimensional intersection spaces with equal
 * leading principal determinants; the leading blocks of the second form are
 * singular exactly in even dimensions.
 */
struct M2kFamily {
  IntersectionSpace p_form;
  IntersectionSpace m_form;
};

M2kFamily build_m2k_family(std::size_t k);

}  // namespace zariski
