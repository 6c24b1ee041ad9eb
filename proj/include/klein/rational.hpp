#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace klein {

using Rational = mpq_class;
using Integer = mpz_class;

// Lowest terms, "num/den", plain "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "3", "-3/4", "1/2".  Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// n/d in lowest terms; mpq_class(n, d) alone does not canonicalize.
Rational frac(const Integer& n, const Integer& d);
Rational pow(const Rational& q, long e);
Integer factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace klein
