#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos)
    throw std::invalid_argument("parse_rational: empty string");
  const std::string trimmed = text.substr(first, last - first + 1);

  Rational r;
  try {
    r = Rational(trimmed);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
  if (r.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace hurwitz
