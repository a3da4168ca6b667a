#include "zariski/decomposition.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zariski/lp.hpp"

namespace zariski {

namespace {

void require_dimension(const IntersectionSpace& space, const QVector& v) {
  if (v.size() != space.dimension()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match space dimension " +
                            std::to_string(space.dimension()));
  }
}

void require_effective(const QVector& v) {
  if (!is_effective(v)) {
    throw NotEffective("input has a negative coefficient");
  }
}

}  // namespace

ZariskiDecomposition decompose_direct(const IntersectionSpace& space, const QVector& v) {
  require_dimension(space, v);
  require_effective(v);
  const std::size_t n = space.dimension();

  // Maximize the coordinate sum over {0 <= x <= v, M x >= 0}. The feasible
  // set is nonempty (x = 0) and boxed, and the maximizer is unique.
  LinearProgram lp;
  lp.objective = QVector(n);
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = 1;
  lp.constraints = space.matrix();
  lp.rhs = QVector(n);
  lp.bounds.resize(n);
  for (std::size_t j = 0; j < n; ++j) lp.bounds[j] = {Rational(0), v[j]};

  const LpResult solved = maximize(lp);
  if (solved.status != LpStatus::Optimal) {
    throw InternalError("the decomposition polytope must admit an optimum");
  }

  ZariskiDecomposition result{solved.point, v - solved.point};
  const DecompositionReport report =
      verify_decomposition(space, v, result.positive, result.negative);
  if (!report.all_conditions() || !report.positive_effective) {
    throw InternalError("direct construction produced an invalid decomposition");
  }
  return result;
}

std::pair<ZariskiDecomposition, AlgorithmTrace> decompose_zariski(
    const IntersectionSpace& space, const QVector& v) {
  require_dimension(space, v);
  require_effective(v);
  const std::size_t n = space.dimension();
  const std::size_t round_limit = support(v).size();

  AlgorithmTrace trace;
  QVector remainder = v;
  std::vector<std::size_t> active;  // ascending basis indices

  while (!is_nef(space, remainder)) {
    if (trace.steps.size() >= round_limit) {
      throw InternalError("iteration bound exceeded; the subspaces must grow");
    }

    const QVector products = space.matrix() * remainder;
    for (std::size_t j = 0; j < n; ++j) {
      if (products[j] < 0 &&
          std::find(active.begin(), active.end(), j) == active.end()) {
        active.push_back(j);
      }
    }
    const SupportSet subspace{active};
    active = subspace.indices();

    // Increment supported on the subspace, pairing there exactly like the
    // remainder; the restricted matrix is negative definite, so solvable.
    const std::size_t k = active.size();
    QVector restricted_rhs(k);
    for (std::size_t c = 0; c < k; ++c) restricted_rhs[c] = products[active[c]];
    const QVector coefficients =
        solve_linear_system(space.restricted_matrix(subspace), restricted_rhs);

    QVector increment(n);
    for (std::size_t c = 0; c < k; ++c) increment[active[c]] = coefficients[c];
    remainder -= increment;
    trace.steps.push_back({subspace, increment, remainder});
  }

  return {ZariskiDecomposition{remainder, v - remainder}, std::move(trace)};
}

ZariskiDecomposition decompose_oracle(const IntersectionSpace& space, const QVector& v,
                                      std::size_t dimension_cap) {
  require_dimension(space, v);
  require_effective(v);
  if (space.dimension() > dimension_cap) {
    throw DimensionCapExceeded("space dimension " + std::to_string(space.dimension()) +
                               " exceeds the exhaustive-scan cap " +
                               std::to_string(dimension_cap));
  }
  const std::size_t n = space.dimension();

  std::vector<SupportSet> candidates{SupportSet{}};
  for (auto& subset :
       negative_definite_sublattice(space, support(v), dimension_cap)) {
    candidates.push_back(std::move(subset));
  }

  std::vector<std::pair<SupportSet, ZariskiDecomposition>> accepted;
  for (const SupportSet& subset : candidates) {
    // Candidate positive part: orthogonal to the subset's basis vectors,
    // pinned to v elsewhere. Fixing the off-subset coordinates reduces the
    // system to the negative definite restriction, so it is nonsingular.
    RationalMatrix system(n, n);
    QVector rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (subset.contains(j)) {
        for (std::size_t c = 0; c < n; ++c) system(j, c) = space.matrix()(j, c);
      } else {
        system(j, j) = 1;
        rhs[j] = v[j];
      }
    }
    const QVector p = solve_linear_system(system, rhs);
    const QVector negative = v - p;
    if (is_nef(space, p) && is_effective(negative) && support(negative) == subset) {
      accepted.push_back({subset, ZariskiDecomposition{p, negative}});
    }
  }

  if (accepted.size() != 1) {
    throw UniquenessViolation("exhaustive scan accepted " +
                              std::to_string(accepted.size()) +
                              " support subsets instead of exactly one");
  }
  return accepted.front().second;
}

DecompositionReport verify_decomposition(const IntersectionSpace& space, const QVector& v,
                                         const QVector& p, const QVector& n) {
  require_dimension(space, v);
  require_dimension(space, p);
  require_dimension(space, n);

  DecompositionReport report;
  report.reconstructs = (p + n == v);
  report.positive_nef = is_nef(space, p);
  report.negative_effective = is_effective(n);
  report.positive_effective = is_effective(p);

  const SupportSet negative_support = support(n);
  const QVector products = space.matrix() * p;
  report.orthogonal = true;
  for (const std::size_t j : negative_support) {
    if (products[j] != 0) report.orthogonal = false;
  }
  report.support_negative_definite =
      is_negative_definite(space.restricted_matrix(negative_support));
  return report;
}

bool is_numerically_equivalent(const IntersectionSpace& space, const QVector& v,
                               const QVector& v2) {
  require_dimension(space, v);
  require_dimension(space, v2);
  return space.matrix() * v == space.matrix() * v2;
}

bool is_quasi_effective(const IntersectionSpace& space, const QVector& w) {
  require_dimension(space, w);
  return feasible_point(space.matrix(), space.matrix() * w).has_value();
}

ZariskiDecomposition decompose_quasi_effective(const IntersectionSpace& space,
                                               const QVector& w) {
  require_dimension(space, w);

  QVector equivalent_effective;
  if (is_effective(w)) {
    equivalent_effective = w;
  } else {
    const auto y = feasible_point(space.matrix(), space.matrix() * w);
    if (!y) {
      throw NotQuasiEffective(
          "no effective vector pairs like the input with every basis vector");
    }
    equivalent_effective = *y;
  }

  const ZariskiDecomposition base = decompose_direct(space, equivalent_effective);
  return {base.positive + (w - equivalent_effective), base.negative};
}

M2kFamily build_m2k_family(std::size_t k) {
  const std::size_t n = 2 * k;
  RationalMatrix staircase(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((std::max(i, j) + 1) % 2 == 1) staircase(i, j) = 1;
    }
  }

  RationalMatrix reshaped = staircase;
  for (std::size_t i = 2; i <= k; ++i) {
    const std::size_t target = 2 * i - 1;
    for (std::size_t r = 0; r < n; ++r) {
      reshaped(r, target) += reshaped(r, 0) - reshaped(r, 1);
    }
    for (std::size_t c = 0; c < n; ++c) {
      reshaped(target, c) += reshaped(0, c) - reshaped(1, c);
    }
  }

  return {validate_space(std::move(staircase)), validate_space(std::move(reshaped))};
}

}  // namespace zariski
