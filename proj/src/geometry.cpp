#include "zariski/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zariski {

namespace {

const IntersectionSpace& blowup_space_instance() {
  static const IntersectionSpace space = two_point_blowup_space();
  return space;
}

Integer choose_two(const Integer& m) { return m * (m - 1) / 2; }

Integer integer_coefficient(const Rational& value, const char* which) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw NonIntegerCoefficient(std::string(which) +
                                " must be an integer for the dimension formula");
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace

IntersectionSpace two_point_blowup_space() {
  RationalMatrix matrix(3, 3);
  matrix(0, 0) = -1;
  matrix(0, 1) = 1;
  matrix(0, 2) = 1;
  matrix(1, 0) = 1;
  matrix(1, 1) = -1;
  matrix(2, 0) = 1;
  matrix(2, 2) = -1;
  return validate_space(std::move(matrix), {"L", "E1", "E2"});
}

IntersectionSpace blown_up_cubic_space() {
  RationalMatrix matrix(3, 3);
  matrix(0, 0) = 3;
  matrix(0, 1) = 1;
  matrix(0, 2) = 1;
  matrix(1, 0) = 1;
  matrix(1, 2) = 1;
  matrix(2, 0) = 1;
  matrix(2, 1) = 1;
  matrix(2, 2) = -1;
  return validate_space(std::move(matrix), {"C1", "C2", "E"});
}

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Nef: return "nef";
    case CaseTag::BothExceptional: return "both-exceptional";
    case CaseTag::FirstExceptional: return "first-exceptional";
    case CaseTag::SecondExceptional: return "second-exceptional";
    case CaseTag::Line: return "line";
  }
  throw InternalError("unnamed case tag");
}

std::pair<ZariskiDecomposition, CaseTag> five_case_decomposition(const BlowupDivisor& divisor) {
  const Rational& a = divisor.a;
  const Rational& b = divisor.b;
  const Rational& c = divisor.c;
  if (a < 0 || b < 0 || c < 0) {
    throw NotEffective("divisor coefficients must be nonnegative");
  }

  std::vector<std::pair<CaseTag, ZariskiDecomposition>> matches;
  if (a >= b && a >= c && b + c >= a) {
    matches.push_back({CaseTag::Nef, {{a, b, c}, QVector(3)}});
  }
  if (a <= b && a <= c) {
    matches.push_back({CaseTag::BothExceptional, {{a, a, a}, {Rational(0), b - a, c - a}}});
  }
  if (c <= a && a <= b) {
    matches.push_back({CaseTag::FirstExceptional, {{a, a, c}, {Rational(0), b - a, Rational(0)}}});
  }
  if (b <= a && a <= c) {
    matches.push_back({CaseTag::SecondExceptional, {{a, b, a}, {Rational(0), Rational(0), c - a}}});
  }
  if (b + c <= a) {
    matches.push_back({CaseTag::Line, {{b + c, b, c}, {a - b - c, Rational(0), Rational(0)}}});
  }
  if (matches.empty()) {
    throw InternalError("the five regions cover the effective octant");
  }

  // Region boundaries belong to several rows; the rows must not disagree.
  const ZariskiDecomposition& chosen = matches.front().second;
  for (const auto& match : matches) {
    const ZariskiDecomposition& candidate = match.second;
    if (candidate.positive != chosen.positive || candidate.negative != chosen.negative) {
      throw InternalError("overlapping closed-form rows disagree");
    }
  }

  const QVector total{a, b, c};
  const DecompositionReport report = verify_decomposition(
      blowup_space_instance(), total, chosen.positive, chosen.negative);
  if (!report.all_conditions() || !report.positive_effective) {
    throw InternalError("closed-form row produced an invalid decomposition");
  }
  return {chosen, matches.front().first};
}

Integer dim_plane_system(const Integer& degree, const Integer& multiple) {
  if (degree < 1 || multiple < 1) {
    throw NonPositiveInput("degree and multiple must be positive");
  }
  return choose_two(multiple * degree + 2) - 1;
}

Integer dim_two_point_system(const BlowupDivisor& divisor, const Integer& multiple) {
  if (multiple < 1) {
    throw NonPositiveInput("multiple must be positive");
  }
  const Integer a = integer_coefficient(divisor.a, "a");
  const Integer b = integer_coefficient(divisor.b, "b");
  const Integer c = integer_coefficient(divisor.c, "c");

  switch (five_case_decomposition(divisor).second) {
    case CaseTag::Nef:
      return choose_two(multiple * a + 2) - choose_two(multiple * (a - b) + 1) -
             choose_two(multiple * (a - c) + 1) - 1;
    case CaseTag::Line:
      return (multiple * b + 1) * (multiple * c + 1) - 1;
    default:
      throw UnsupportedCase(
          "no closed form when the negative part is supported on an exceptional curve");
  }
}

std::vector<Rational> asymptotic_ratio_report(const std::vector<Rational>& dim_values,
                                              const Rational& target, std::size_t n_max) {
  if (n_max < 1) {
    throw NonPositiveInput("at least one ratio is required");
  }
  if (dim_values.size() < n_max) {
    throw DimensionMismatch("fewer dimension values than requested ratios");
  }

  std::vector<Rational> deviations;
  deviations.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational ratio = dim_values[n - 1] * 2 / Rational(Integer(n) * Integer(n));
    deviations.push_back(boost::multiprecision::abs(ratio - target));
  }
  return deviations;
}

}  // namespace zariski
