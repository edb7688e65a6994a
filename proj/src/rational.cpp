#include "compoly/rational.hpp"

#include <stdexcept>

namespace compoly {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt binomial(const BigInt& a, long b) {
  if (b < 0) return 0;
  BigInt num = 1;
  BigInt factor;
  for (long j = 0; j < b; ++j) {
    factor = a - j;
    num *= factor;
  }
  return num / factorial(b);
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

} // namespace compoly
