#pragma once

#include "compoly/composition.hpp"
#include "compoly/lattice_enum.hpp"
#include "compoly/polynomial.hpp"
#include "compoly/rational.hpp"

#include <vector>

namespace compoly {

/// Tuple in N^n with total n whose prefix sums dominate every partial
/// sum of the composition; these index the closed-form dilate count.
struct KTuple {
  std::vector<int> kappas;
  bool operator==(const KTuple&) const = default;
};

/// Prefix-sum histogram of a dilate point: b[j-1] counts the indices i
/// with a_1 + ... + a_i = j, for 1 <= j <= m*n.
struct BProfile {
  std::vector<int> b;
  int m = 1;
  bool operator==(const BProfile&) const = default;
};

/// Word w in [n]^n; admissibility ties its sorted rearrangement to the
/// partial sums of a composition.
struct Word {
  std::vector<int> letters;

  /// Ascents of (w_0, w_1, ..., w_n) with w_0 := 1.
  int ascents() const;
  bool operator==(const Word&) const = default;
};

/// Number of lattice points of the m-fold dilate by direct enumeration.
/// Small sizes only; serves as the reference for the closed-form route.
BigInt ehrhart_count_oracle(const Composition& sigma, int m);

/// All index tuples for the closed-form dilate count, ascending
/// lexicographic.
std::vector<KTuple> enumerate_ktuples(const Composition& sigma);

/// Closed-form dilate count: sum over index tuples of
/// C(m + k_1, k_1) * prod_{i >= 2} C(m + k_i - 1, k_i).
BigInt ehrhart_ksum(const Composition& sigma, int m);

/// Degree-n counting polynomial interpolated from the closed form and
/// cross-checked against direct enumeration where feasible.
ExactPolynomial ehrhart_polynomial(const Composition& sigma);

/// Number of multichains x_1 <= ... <= x_m of lattice points, computed
/// as a product-of-binomials sum over the points; 1 when m = 0.
BigInt zeta_value(const Composition& sigma, int m);

/// Same count by explicit multichain enumeration. Very small sizes only.
BigInt zeta_brute(const Composition& sigma, int m);

/// Polynomial Z with Z(m + 1) = zeta_value(sigma, m), interpolated at
/// t = 1..n+2 and checked to have degree <= n.
ExactPolynomial zeta_polynomial(const Composition& sigma);

/// Histogram side of the dilate-point correspondence.
BProfile dilate_to_bprofile(const Composition& sigma, int m, const LatticePoint& a);

/// Inverse: rebuilds the point whose prefix sums realize the histogram.
LatticePoint bprofile_to_dilate(const Composition& sigma, const BProfile& profile);

/// Coefficients of the numerator of the generating series
/// sum_m Ehr(m) x^m = h*(x) / (1-x)^(n+1); validated to be nonnegative
/// integers with constant term 1.
ExactPolynomial hstar_from_series(const Composition& sigma);

/// Whether the sorted rearrangement u of w satisfies u_{s_i} <= s_i for
/// every partial sum s_i of sigma.
bool word_admissible(const Composition& sigma, const Word& w);

/// Numerator polynomial as the ascent generating function over
/// admissible words.
ExactPolynomial hstar_words(const Composition& sigma);

/// Descent generating function of the edge labels over the maximal
/// chains of the point poset extended by a top element. The poset is
/// realized by suffix constraints, so the label of a step is the index
/// of the raised coordinate and the final step to the top carries 1.
ExactPolynomial el_chain_h(const Composition& sigma);

} // namespace compoly
