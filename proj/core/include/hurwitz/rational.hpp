#ifndef HURWITZ_RATIONAL_HPP
#define HURWITZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hurwitz {

// Exact rational arithmetic over arbitrary-precision integers. Every
// coefficient computation in this library stays inside Rational; floating
// point never enters a formula path.
using Rational = mpq_class;

// num/den in lowest terms with positive denominator. den must be nonzero.
Rational ratio(long num, long den = 1);

// "p/q" in lowest terms, or plain "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts an integer "p" or a fraction "p/q", signs allowed on either part.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace hurwitz

#endif
