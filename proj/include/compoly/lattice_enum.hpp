#pragma once

#include "compoly/composition.hpp"
#include "compoly/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace compoly {

/// A point of N^n, with n fixed by context.
struct LatticePoint {
  std::vector<int> coords;

  int nonzero_count() const;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Recording tuple of a point: entry j is the prefix sum a_1+...+a_j
/// when a_j >= 1 and 0 otherwise, so the nonzero entries are strictly
/// increasing and sit at the nonzero positions of the point.
struct HTuple {
  std::vector<int> entries;

  /// 1-based positions of the nonzero entries, ascending.
  std::vector<int> positions() const;
  /// Nonzero entry values, ascending.
  std::vector<int> values() const;
  bool operator==(const HTuple&) const = default;
};

/// Word over {'E','N'} of length 2n+2, read left to right; always
/// starts with 'E' and ends with 'N' for the paths produced here.
struct LatticePath {
  std::string steps;

  int n() const { return static_cast<int>(steps.size()) / 2 - 1; }
  bool operator==(const LatticePath&) const = default;
};

/// values[i] counts the points with exactly i nonzero coordinates.
struct HVector {
  std::vector<std::int64_t> values;
  bool operator==(const HVector&) const = default;
};

/// values[i] is the coefficient of t^i (1+t)^(n-2i); length floor(n/2)+1.
struct GammaVector {
  std::vector<std::int64_t> values;
  bool operator==(const GammaVector&) const = default;
};

/// Whether x lies in the m-fold dilate: every prefix sum a_1+...+a_j
/// stays within m * prefix_bound(j). Coordinates must be >= 0 and the
/// length must be n.
bool contains(const Composition& sigma, const LatticePoint& x, int dilation = 1);

/// Visits every point of the m-fold dilate in ascending lexicographic
/// order. The visitor receives the coordinate vector by const reference.
/// Every partial prefix extends to a full point (append zeros), so the
/// search never enters a dead branch.
template <class Visitor>
void for_each_dilate_point(const Composition& sigma, int m, Visitor&& visit) {
  const int n = sigma.n();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long long prefix) -> void {
    if (pos == n) {
      visit(static_cast<const std::vector<int>&>(a));
      return;
    }
    const long long cap = static_cast<long long>(m) * sigma.prefix_bound(pos + 1);
    for (int v = 0; prefix + v <= cap; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, prefix + v);
    }
    a[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, 0);
}

/// All lattice points of the polytope, ascending lexicographic.
std::vector<LatticePoint> enumerate_points(const Composition& sigma);

/// Bijective recording map on the lattice points; rejects points
/// outside the polytope.
HTuple encode(const Composition& sigma, const LatticePoint& x);

/// Inverse of encode; rejects tuples outside the admissible set.
LatticePoint decode(const Composition& sigma, const HTuple& h);

/// Whether h is the encoding of some point: entries in [0, n], nonzero
/// entries strictly increasing, and entry j bounded by prefix_bound(j).
bool htuple_admissible(const Composition& sigma, const HTuple& h);

HVector h_vector(const Composition& sigma);

/// Gamma coefficients counted directly: points whose nonzero position
/// set is disjoint from its prefix-value set, graded by support size.
GammaVector gamma_direct(const Composition& sigma);

ExactPolynomial h_polynomial(const Composition& sigma);

/// Monotone path from (-1,0) to (n,n+1): an east step, then after each
/// column j the north run raised by a_j, closed off with an east step
/// per column and trailing norths.
LatticePath to_path(const LatticePoint& x);

/// Path of the extreme point with a_{s_{i-1}+1} = r_i; points of the
/// polytope are exactly those whose path stays weakly below this one.
LatticePath gamma_path(const Composition& sigma);

/// Strip-height comparison of two equal-length paths.
bool lies_weakly_below(const LatticePath& path, const LatticePath& upper);

/// Number of indices with an 'E' step immediately followed by 'N'.
int en_corner_count(const LatticePath& path);

} // namespace compoly
