#pragma once

#include <gmpxx.h>

#include <string>

namespace chromapos {

// All coefficients are exact. Integer is an arbitrary-precision integer,
// Rational an arbitrary-precision rational kept in lowest terms.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);
Integer binomial(long n, long k);

// Multinomial (sum r_i choose r_1,...,r_k); zero if any r_i < 0.
Integer multinomial(const std::vector<long>& r);

// Integer power with the convention 0^0 = 1.
Integer int_pow(long base, long exponent);

Rational make_rational(const Integer& num, const Integer& den);
bool is_integer(const Rational& q);
// Throws Internal if q is not integral.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);  // "p" when integral, else "p/q"
Rational rational_from_text(const std::string& text);

}  // namespace chromapos
