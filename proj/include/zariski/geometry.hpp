#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zariski/decomposition.hpp"

namespace zariski {

/** Plane blown up at two points; ordered basis L, E1, E2. */
IntersectionSpace two_point_blowup_space();

/** Nodal cubic with a line through the node, node blown up; basis C1, C2, E. */
IntersectionSpace blown_up_cubic_space();

/** Effective divisor a L + b E1 + c E2 on the two-point blow-up. */
struct BlowupDivisor {
  Rational a;
  Rational b;
  Rational c;
};

/**
 * Which closed-form row produced the decomposition, named after the support
 * of the negative part. Nef means the divisor was its own positive part.
 */
enum class CaseTag { Nef, BothExceptional, FirstExceptional, SecondExceptional, Line };

const char* case_name(CaseTag tag);

/**
 * Closed-form decomposition on the two-point blow-up, one row per region of
 * coefficient space. Rows are tried in a fixed order; on region boundaries
 * every applicable row is evaluated and checked to agree before the first one
 * is returned. Throws NotEffective on a negative coefficient.
 */
std::pair<ZariskiDecomposition, CaseTag> five_case_decomposition(const BlowupDivisor& divisor);

/**
 * Dimension of the system of degree multiple*degree plane curves:
 * C(multiple*degree + 2, 2) - 1. Throws NonPositiveInput unless both
 * arguments are >= 1.
 */
Integer dim_plane_system(const Integer& degree, const Integer& multiple);

/**
 * Dimension of |multiple * divisor| on the two-point blow-up, via the closed
 * forms for the nef region, C(na+2,2) - C(n(a-b)+1,2) - C(n(a-c)+1,2) - 1,
 * and the line-supported region, (nb+1)(nc+1) - 1. The three middle regions
 * have no stated closed form and throw UnsupportedCase. Coefficients must be
 * nonnegative integers (NonIntegerCoefficient, NotEffective) and multiple
 * must be >= 1 (NonPositiveInput).
 */
Integer dim_two_point_system(const BlowupDivisor& divisor, const Integer& multiple);

/**
 * Deviations |dim_values[n-1] / (n^2/2) - target| for n = 1..n_max, exact.
 * The sequence must supply at least n_max values (DimensionMismatch) and
 * n_max must be >= 1 (NonPositiveInput).
 */
std::vector<Rational> asymptotic_ratio_report(const std::vector<Rational>& dim_values,
                                              const Rational& target, std::size_t n_max);

}  // namespace zariski
