#include "zariski/rational.hpp"

#include <cctype>
#include <sstream>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

bool all_digits(const std::string& text, std::size_t from) {
  if (from >= text.size()) return false;
  for (std::size_t i = from; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto fail = [&text]() -> Rational {
    throw ParseError("not a rational literal: \"" + text + "\"");
  };

  const std::size_t slash = text.find('/');
  const std::string numerator_text = text.substr(0, slash);

  std::size_t digits_from = 0;
  if (!numerator_text.empty() &&
      (numerator_text[0] == '+' || numerator_text[0] == '-')) {
    digits_from = 1;
  }
  if (!all_digits(numerator_text, digits_from)) return fail();

  // GMP rejects an explicit leading '+'.
  const Integer numerator(numerator_text[0] == '+' ? numerator_text.substr(1)
                                                   : numerator_text);
  if (slash == std::string::npos) return Rational(numerator);

  // Denominator: unsigned positive digits only.
  const std::string denominator_text = text.substr(slash + 1);
  if (!all_digits(denominator_text, 0)) return fail();
  const Integer denominator(denominator_text);
  if (denominator == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(numerator, denominator);  // canonicalized by the constructor
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> values;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) values.push_back(parse_rational(token));
  return values;
}

}  // namespace zariski
