#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compoly {

/// Thrown when an input exceeds one of the enumeration size guards.
class guard_error : public std::runtime_error {
 public:
  guard_error(const std::string& what_arg, std::string guard, long limit);
  const std::string& guard_name() const noexcept { return guard_; }
  long limit() const noexcept { return limit_; }

 private:
  std::string guard_;
  long limit_;
};

/// Enumeration size limits. The defaults keep every operation at desk
/// scale; raise_guards_to lifts all of them for users who accept long runs.
struct Guards {
  int construct = 16;    // composition construction and parsing
  int enumerate_n = 12;  // point enumeration, h/gamma counting, zeta values
  int oracle_n = 8;      // brute-force dilate counting
  int oracle_m = 4;
  int brute_zeta_n = 5;  // explicit multichain enumeration
  int brute_zeta_m = 3;
  int words_n = 8;       // word enumeration, n^n states before pruning
  int chains_n = 5;      // maximal chain enumeration
};

Guards& guards();

/// Lifts every limit to at least n.
void raise_guards_to(int n);

/// An integer composition (r_1,...,r_k) of n = r_1 + ... + r_k with all
/// parts >= 1. Immutable after construction; partial sums are cached.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  /// Parses "r1,r2,...,rk". Rejects empty input, non-numeric or
  /// non-positive tokens (reported by 1-based position), and totals
  /// beyond the construction guard.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(parts_.size()); }

  /// s_0 = 0, s_i = r_1 + ... + r_i; size k+1.
  const std::vector<int>& partial_sums() const noexcept { return sums_; }
  int partial_sum(int i) const { return sums_.at(static_cast<std::size_t>(i)); }

  /// Smallest partial sum s_i with s_i >= j, for 1 <= j <= n. A point
  /// lies in the polytope iff its j-th coordinate prefix sum never
  /// exceeds prefix_bound(j).
  int prefix_bound(int j) const { return bounds_.at(static_cast<std::size_t>(j)); }

  Composition reversed() const;

  std::string to_string() const;

  bool operator==(const Composition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> sums_;
  std::vector<int> bounds_;
  int n_ = 0;
};

/// All 2^(n-1) compositions of n in ascending lexicographic order,
/// e.g. (1,1,1), (1,2), (2,1), (3) for n = 3.
std::vector<Composition> all_compositions(int n);

} // namespace compoly
