#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eqfix {

// Arbitrary precision scalars. mpq_class keeps fractions canonical
// (positive denominator, lowest terms) through all arithmetic.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws InvalidArgument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

}  // namespace eqfix
