#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace compoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den reduced to lowest terms with positive denominator.
Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Canonical text form "p/q", or just "p" when the value is integral.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// C(a, b) by the falling-factorial definition a(a-1)...(a-b+1)/b!,
/// so negative a is allowed; b < 0 yields 0.
BigInt binomial(const BigInt& a, long b);

BigInt factorial(long n);

} // namespace compoly
