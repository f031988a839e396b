#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nmfr {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator).
using Rational = mpq_class;

// Parses "-3/7", "12", "+5". Throws InputError on anything else, including a
// zero denominator.
Rational parse_rational(std::string_view token);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace nmfr
