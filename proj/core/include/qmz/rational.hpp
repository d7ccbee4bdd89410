#pragma once

#include <gmpxx.h>

#include <string>

namespace qmz {

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p/q" or "p"; throws DomainError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

Integer binomial(long n, long k);
Integer factorial(unsigned n);

} // namespace qmz
