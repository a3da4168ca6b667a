#include "zariski/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/test_helpers.hpp"
#include "zariski/errors.hpp"

using namespace zariski;
namespace zt = zariski::testing;
using zt::int_matrix;
using zt::int_vector;
using zt::vec;

namespace {

BlowupDivisor divisor(int a, int b, int c) {
  return {Rational(a), Rational(b), Rational(c)};
}

QVector coefficients(const BlowupDivisor& d) { return {d.a, d.b, d.c}; }

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("the two point blow-up space is the canned matrix") {
  const IntersectionSpace space = two_point_blowup_space();
  CHECK(space.matrix() == int_matrix({{-1, 1, 1}, {1, -1, 0}, {1, 0, -1}}));
  CHECK(space.labels() == std::vector<std::string>{"L", "E1", "E2"});
  CHECK_FALSE(is_negative_definite(space.matrix()));
  CHECK(is_nef(space, int_vector({2, 1, 1})));
}

TEST_CASE("the blown up cubic space is the canned matrix") {
  const IntersectionSpace space = blown_up_cubic_space();
  CHECK(space.matrix() == int_matrix({{3, 1, 1}, {1, 0, 1}, {1, 1, -1}}));
  CHECK(space.labels() == std::vector<std::string>{"C1", "C2", "E"});

  // The first row is itself effective, so effective vectors pair
  // nonnegatively with C1.
  zt::reseed(711u);
  auto& engine = zt::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const QVector v = zt::random_effective_vector(engine, 3);
    CHECK(pairing(space, v, QVector::unit(3, 0)) >= 0);
  }

  const auto result = decompose_direct(space, int_vector({1, 1, 0}));
  CHECK(space.matrix() * int_vector({1, 1, 0}) == int_vector({4, 1, 2}));
  CHECK(result.positive == int_vector({1, 1, 0}));
  CHECK(result.negative.is_zero());
}

TEST_CASE("each closed-form row fires on its region") {
  const auto nef = five_case_decomposition(divisor(2, 1, 1));
  CHECK(nef.second == CaseTag::Nef);
  CHECK(nef.first.positive == int_vector({2, 1, 1}));
  CHECK(nef.first.negative.is_zero());

  const auto both = five_case_decomposition(divisor(1, 2, 2));
  CHECK(both.second == CaseTag::BothExceptional);
  CHECK(both.first.positive == int_vector({1, 1, 1}));
  CHECK(both.first.negative == int_vector({0, 1, 1}));

  const auto first = five_case_decomposition(divisor(1, 2, 0));
  CHECK(first.second == CaseTag::FirstExceptional);
  CHECK(first.first.positive == int_vector({1, 1, 0}));
  CHECK(first.first.negative == int_vector({0, 1, 0}));

  const auto second = five_case_decomposition(divisor(1, 0, 2));
  CHECK(second.second == CaseTag::SecondExceptional);
  CHECK(second.first.positive == int_vector({1, 0, 1}));
  CHECK(second.first.negative == int_vector({0, 0, 1}));

  const auto line = five_case_decomposition(divisor(3, 1, 1));
  CHECK(line.second == CaseTag::Line);
  CHECK(line.first.positive == int_vector({2, 1, 1}));
  CHECK(line.first.negative == int_vector({1, 0, 0}));
}

TEST_CASE("case tags have stable names") {
  CHECK(std::string(case_name(CaseTag::Nef)) == "nef");
  CHECK(std::string(case_name(CaseTag::BothExceptional)) == "both-exceptional");
  CHECK(std::string(case_name(CaseTag::FirstExceptional)) == "first-exceptional");
  CHECK(std::string(case_name(CaseTag::SecondExceptional)) == "second-exceptional");
  CHECK(std::string(case_name(CaseTag::Line)) == "line");
}

TEST_CASE("rational coefficients work in the closed forms") {
  const BlowupDivisor d{Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  const auto [split, tag] = five_case_decomposition(d);
  CHECK(tag == CaseTag::Nef);
  CHECK(split.positive == vec("1/2 1/3 1/4"));
  CHECK(split.negative.is_zero());
}

TEST_CASE("negative coefficients are rejected") {
  CHECK_THROWS_AS(five_case_decomposition({Rational(-1), Rational(0), Rational(0)}),
                  NotEffective);
}

TEST_CASE("closed forms agree with the direct construction on a grid") {
  const IntersectionSpace space = two_point_blowup_space();
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) {
        const BlowupDivisor d = divisor(a, b, c);
        const auto [split, tag] = five_case_decomposition(d);
        const auto direct = decompose_direct(space, coefficients(d));
        CHECK(split.positive == direct.positive);
        CHECK(split.negative == direct.negative);
      }
    }
  }
}

TEST_CASE("boundary divisors satisfy every applicable row at once") {
  // a = b = c sits in four regions; b + c = a joins the nef and line regions.
  // five_case_decomposition already asserts the overlap agreement internally;
  // these calls would throw if the rows disagreed.
  const auto balanced = five_case_decomposition(divisor(2, 2, 2));
  CHECK(balanced.first.positive == int_vector({2, 2, 2}));
  CHECK(balanced.first.negative.is_zero());

  const auto edge = five_case_decomposition(divisor(4, 3, 1));
  CHECK(edge.second == CaseTag::Nef);
  CHECK(edge.first.negative.is_zero());

  const auto tilted = five_case_decomposition(divisor(3, 3, 1));
  CHECK(tilted.first.positive == int_vector({3, 3, 1}));
  CHECK(tilted.first.negative.is_zero());
}

TEST_CASE("self-intersection of the positive part takes its closed form") {
  const IntersectionSpace space = two_point_blowup_space();
  for (int a = 1; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        const auto [split, tag] = five_case_decomposition(divisor(a, b, c));
        const Rational self = pairing(space, split.positive, split.positive);
        const Rational ra(a), rb(b), rc(c);
        if (tag == CaseTag::Nef) {
          CHECK(self == -ra * ra - rb * rb - rc * rc + 2 * ra * rb + 2 * ra * rc);
        } else if (tag == CaseTag::Line) {
          CHECK(self == 2 * rb * rc);
        }
      }
    }
  }
}

TEST_CASE("plane system dimensions take their closed form") {
  CHECK(dim_plane_system(3, 1) == 9);
  CHECK(dim_plane_system(1, 1) == 2);
  CHECK(dim_plane_system(2, 3) == 27);
  CHECK_THROWS_AS(dim_plane_system(0, 1), NonPositiveInput);
  CHECK_THROWS_AS(dim_plane_system(3, 0), NonPositiveInput);
}

TEST_CASE("two point system dimensions cover the two closed-form regions") {
  CHECK(dim_two_point_system(divisor(2, 1, 1), 1) == 3);
  CHECK(dim_two_point_system(divisor(3, 1, 1), 1) == 3);
  CHECK(dim_two_point_system(divisor(3, 1, 1), 2) == 8);

  CHECK_THROWS_AS(dim_two_point_system(divisor(2, 1, 1), 0), NonPositiveInput);
  CHECK_THROWS_AS(dim_two_point_system(divisor(1, 2, 2), 1), UnsupportedCase);
  CHECK_THROWS_AS(dim_two_point_system(divisor(1, 2, 0), 1), UnsupportedCase);
  CHECK_THROWS_AS(dim_two_point_system(divisor(1, 0, 2), 1), UnsupportedCase);
  CHECK_THROWS_AS(
      dim_two_point_system({Rational(1, 2), Rational(0), Rational(0)}, 1),
      NonIntegerCoefficient);
}

TEST_CASE("plane dimension ratios approach the squared degree") {
  const std::size_t n_max = 200;
  std::vector<Rational> dims;
  for (std::size_t n = 1; n <= n_max; ++n) {
    dims.push_back(Rational(dim_plane_system(3, Integer(n))));
  }
  const auto deviations = asymptotic_ratio_report(dims, Rational(9), n_max);
  REQUIRE(deviations.size() == n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    CHECK(deviations[n - 1] == Rational(9, static_cast<int>(n)));
    if (n > 1) CHECK(deviations[n - 1] < deviations[n - 2]);
  }
  CHECK(deviations[99] <= Rational(1, 10));
}

TEST_CASE("blow-up dimension ratios approach the self-intersection") {
  const IntersectionSpace space = two_point_blowup_space();
  const std::size_t n_max = 200;

  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) {
        const BlowupDivisor d = divisor(a, b, c);
        const auto [split, tag] = five_case_decomposition(d);
        if (tag != CaseTag::Nef && tag != CaseTag::Line) continue;
        const Rational target = pairing(space, split.positive, split.positive);
        const Rational slope =
            tag == CaseTag::Nef ? Rational(a + b + c) : Rational(2 * (b + c));

        const std::size_t depth = (a == 2 && b == 1 && c == 1) ||
                                          (a == 3 && b == 1 && c == 1)
                                      ? n_max
                                      : 24;
        std::vector<Rational> dims;
        for (std::size_t n = 1; n <= depth; ++n) {
          dims.push_back(Rational(dim_two_point_system(d, Integer(n))));
        }
        const auto deviations = asymptotic_ratio_report(dims, target, depth);
        for (std::size_t n = 1; n <= depth; ++n) {
          CHECK(deviations[n - 1] == slope / Rational(static_cast<int>(n)));
          if (n > 1) CHECK(deviations[n - 1] < deviations[n - 2]);
        }
      }
    }
  }

  const auto familiar = five_case_decomposition(divisor(2, 1, 1));
  CHECK(pairing(space, familiar.first.positive, familiar.first.positive) == 2);
  const auto wide = five_case_decomposition(divisor(3, 1, 1));
  CHECK(pairing(space, wide.first.positive, wide.first.positive) == 2);
}

TEST_CASE("ratio report rejects bad shapes") {
  const std::vector<Rational> dims{Rational(1), Rational(4)};
  CHECK_THROWS_AS(asymptotic_ratio_report(dims, Rational(1), 0), NonPositiveInput);
  CHECK_THROWS_AS(asymptotic_ratio_report(dims, Rational(1), 3), DimensionMismatch);
}

TEST_SUITE_END();
