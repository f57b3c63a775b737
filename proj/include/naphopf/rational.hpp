#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace naphopf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders as "p/q" with q > 0, including integers ("2/1").
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p" or "p/q"; throws std::invalid_argument otherwise or on q == 0.
Rational parse_rational(std::string_view text);

Rational make_rational(long numerator, long denominator = 1);

Integer factorial(unsigned long n);

}  // namespace naphopf
