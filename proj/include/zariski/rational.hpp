#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace zariski {

// Arbitrary-precision rationals. GMP canonicalizes after every operation, so a
// Rational is always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/**
 * Parses a rational literal of the form "p" or "p/q". A sign is allowed on the
 * front; the denominator must be a positive integer. Throws ParseError on
 * anything else, including "p/0".
 */
Rational parse_rational(const std::string& text);

/** Canonical text form: "p" when the denominator is 1, otherwise "p/q". */
std::string to_string(const Rational& value);

/** Splits on whitespace and parses each token with parse_rational. */
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace zariski
