#pragma once

#include "compoly/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace compoly {

/// Dense univariate polynomial with exact rational coefficients, stored
/// low degree first. Trailing zeros are trimmed on construction; the
/// zero polynomial has no coefficients and degree() == -1.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coeffs);

  static ExactPolynomial constant(const Rational& c);
  static ExactPolynomial from_counts(const std::vector<std::int64_t>& counts);
  /// c * t^e
  static ExactPolynomial monomial(const Rational& c, int e);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Zero beyond the stored range.
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  ExactPolynomial derivative() const;
  /// p(t + c)
  ExactPolynomial shifted_arg(const Rational& c) const;

  ExactPolynomial& operator+=(const ExactPolynomial& rhs);
  ExactPolynomial& operator-=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const Rational& c);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(ExactPolynomial a, const Rational& c);
  friend ExactPolynomial operator-(ExactPolynomial a);

  bool operator==(const ExactPolynomial& other) const { return coeffs_ == other.coeffs_; }

  /// Human form like "1 + 7t + 7t^2 + t^3"; non-integer coefficients are
  /// parenthesized, e.g. "(5/2)t".
  std::string pretty(const std::string& var = "t") const;
  /// Canonical "p/q" strings, low degree first; empty for the zero polynomial.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg r < deg den. Throws on zero divisor.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& num,
                                                   const ExactPolynomial& den);

/// Monic gcd; gcd(0, 0) = 0.
ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b);

/// Monic product of the distinct irreducible factors (p / gcd(p, p')).
ExactPolynomial squarefree_part(const ExactPolynomial& p);

/// Unique polynomial of degree < #points through the given (x, y) pairs.
/// Throws std::invalid_argument on duplicate abscissae or empty input.
ExactPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Whether coeff(i) == coeff(n - i) for 0 <= i <= n (and degree <= n).
bool is_palindromic(const ExactPolynomial& p, int n);

/// Whether the coefficient sequence weakly rises then weakly falls.
bool is_unimodal(const ExactPolynomial& p);

/// Coefficients gamma_0..gamma_{floor(n/2)} with
/// p = sum gamma_i t^i (1+t)^(n-2i), or nullopt when p is not
/// palindromic with center n/2. Trailing zeros are trimmed.
std::optional<ExactPolynomial> gamma_expand(const ExactPolynomial& p, int n);

/// Inverse direction: sum gamma_i t^i (1+t)^(n-2i).
ExactPolynomial gamma_rebuild(const ExactPolynomial& gammas, int n);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Exact location summary for the real roots of a polynomial.
struct RealRootReport {
  int degree = -1;
  bool all_real = false;       // every complex root is real
  int distinct_root_count = 0; // distinct real roots over all of R
  int roots_in_interval = 0;   // distinct real roots in the closed query interval
  Rational lo;
  Rational hi;
  /// Disjoint intervals, ascending, one distinct real root each. An
  /// interval with lo == hi pins the root exactly; otherwise the root
  /// lies in the half-open range (lo, hi].
  std::vector<RationalInterval> isolating_intervals;
};

/// Sturm-sequence root location on the closed interval [lo, hi].
/// Multiple roots are counted once. Throws std::invalid_argument when
/// p is zero or lo > hi.
RealRootReport sturm_report(const ExactPolynomial& p, const Rational& lo, const Rational& hi);

} // namespace compoly
