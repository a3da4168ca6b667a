#pragma once

#include <optional>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/linalg.hpp"

namespace zariski {

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/**
 * maximize objective . x
 * subject to constraints . x >= rhs (row by row)
 * and per-variable bounds, either side optional.
 */
struct LinearProgram {
  RationalVector objective;
  RationalMatrix constraints;
  RationalVector rhs;
  std::vector<VariableBounds> bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;  // meaningful only when Optimal
  Rational value;        // meaningful only when Optimal
};

/**
 * Exact two-phase bounded-variable simplex. Entering and leaving variables are
 * picked by Bland's least-index rule, which rules out cycling and makes the
 * returned vertex deterministic. Throws MalformedProgram on inconsistent
 * shapes or a lower bound above an upper bound.
 */
LpResult maximize(const LinearProgram& lp);

/**
 * Phase-1 feasibility: some y >= 0 with equalities . y = rhs, or nothing when
 * no such y exists.
 */
std::optional<RationalVector> feasible_point(const RationalMatrix& equalities,
                                             const RationalVector& rhs);

}  // namespace zariski
