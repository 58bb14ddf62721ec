#pragma once

#include <gmpxx.h>

#include <string>

namespace bicell {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction in lowest terms with positive denominator. mpq_class keeps
/// itself canonical after every arithmetic operation.
using Rational = mpq_class;

Integer factorial(unsigned n);

/// C(top, k) for any integer top: top(top-1)...(top-k+1)/k!. Zero for k < 0.
Integer binomial(const Integer& top, long k);
Integer binomial(long top, long k);

/// Builds the canonical fraction num/den. Throws InvalidInput if den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a" or "a/b" in decimal.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace bicell
