#include "compoly/ehrhart_zeta.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace compoly {

namespace {

[[noreturn]] void throw_guard(const char* op, const char* kind, long value,
                              const char* guard, int limit) {
  throw guard_error(std::string(op) + ": " + kind + " = " + std::to_string(value) +
                        " exceeds the '" + guard + "' size guard (limit " +
                        std::to_string(limit) + ")",
                    guard, limit);
}

void check_nonnegative_m(int m) {
  if (m < 0) throw std::invalid_argument("dilation factor must be >= 0");
}

} // namespace

int Word::ascents() const {
  int prev = 1;
  int count = 0;
  for (int v : letters) {
    if (prev < v) ++count;
    prev = v;
  }
  return count;
}

BigInt ehrhart_count_oracle(const Composition& sigma, int m) {
  check_nonnegative_m(m);
  if (sigma.n() > guards().oracle_n)
    throw_guard("ehrhart_count_oracle", "n", sigma.n(), "oracle_n", guards().oracle_n);
  if (m > guards().oracle_m)
    throw_guard("ehrhart_count_oracle", "m", m, "oracle_m", guards().oracle_m);
  std::int64_t count = 0;
  for_each_dilate_point(sigma, m, [&](const std::vector<int>&) {
    if (count == std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("dilate point count exceeds 64 bits");
    ++count;
  });
  return BigInt(static_cast<long>(count));
}

std::vector<KTuple> enumerate_ktuples(const Composition& sigma) {
  const int n = sigma.n();
  if (n > guards().enumerate_n)
    throw_guard("enumerate_ktuples", "n", n, "enumerate", guards().enumerate_n);
  std::vector<char> is_sum(static_cast<std::size_t>(n) + 1, 0);
  for (int s : sigma.partial_sums())
    if (s >= 1) is_sum[static_cast<std::size_t>(s)] = 1;
  std::vector<KTuple> out;
  std::vector<int> kap(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int prefix) -> void {
    if (pos == n - 1) {
      kap[static_cast<std::size_t>(pos)] = n - prefix;
      out.push_back(KTuple{kap});
      return;
    }
    for (int v = 0; prefix + v <= n; ++v) {
      if (is_sum[static_cast<std::size_t>(pos) + 1] && prefix + v < pos + 1) continue;
      kap[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, prefix + v);
    }
    kap[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

BigInt ehrhart_ksum(const Composition& sigma, int m) {
  check_nonnegative_m(m);
  BigInt total = 0;
  for (const KTuple& kt : enumerate_ktuples(sigma)) {
    BigInt term = binomial(BigInt(m + kt.kappas[0]), kt.kappas[0]);
    for (std::size_t i = 1; i < kt.kappas.size() && term != 0; ++i)
      term *= binomial(BigInt(m + kt.kappas[i] - 1), kt.kappas[i]);
    total += term;
  }
  return total;
}

ExactPolynomial ehrhart_polynomial(const Composition& sigma) {
  const int n = sigma.n();
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m)
    points.emplace_back(Rational(m), Rational(ehrhart_ksum(sigma, m)));
  ExactPolynomial poly = interpolate(points);
  if (poly.degree() != n || !(poly.leading_coefficient() > 0))
    throw std::logic_error("dilate counting polynomial of " + sigma.to_string() +
                           " is not degree " + std::to_string(n) +
                           " with positive leading coefficient");
  // Cheap cross-check of the closed form against direct enumeration.
  if (n <= 5) {
    for (int m = 0; m <= std::min(2, guards().oracle_m); ++m)
      if (ehrhart_count_oracle(sigma, m) != ehrhart_ksum(sigma, m))
        throw std::logic_error("dilate count routes disagree for " + sigma.to_string() +
                               " at m = " + std::to_string(m));
  }
  return poly;
}

BigInt zeta_value(const Composition& sigma, int m) {
  check_nonnegative_m(m);
  if (sigma.n() > guards().enumerate_n)
    throw_guard("zeta_value", "n", sigma.n(), "enumerate", guards().enumerate_n);
  if (m == 0) return 1;
  BigInt total = 0;
  for_each_dilate_point(sigma, 1, [&](const std::vector<int>& a) {
    BigInt term = 1;
    for (int c : a) term *= binomial(BigInt(c + m - 1), m - 1);
    total += term;
  });
  return total;
}

BigInt zeta_brute(const Composition& sigma, int m) {
  check_nonnegative_m(m);
  if (sigma.n() > guards().brute_zeta_n)
    throw_guard("zeta_brute", "n", sigma.n(), "brute_zeta_n", guards().brute_zeta_n);
  if (m > guards().brute_zeta_m)
    throw_guard("zeta_brute", "m", m, "brute_zeta_m", guards().brute_zeta_m);
  if (m == 0) return 1;
  const std::vector<LatticePoint> pts = enumerate_points(sigma);
  const auto leq = [](const LatticePoint& x, const LatticePoint& y) {
    for (std::size_t i = 0; i < x.coords.size(); ++i)
      if (x.coords[i] > y.coords[i]) return false;
    return true;
  };
  BigInt total = 0;
  auto rec = [&](auto&& self, int depth, int last) -> void {
    if (depth == m) {
      total += 1;
      return;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (last >= 0 && !leq(pts[static_cast<std::size_t>(last)], pts[i])) continue;
      self(self, depth + 1, static_cast<int>(i));
    }
  };
  rec(rec, 0, -1);
  return total;
}

ExactPolynomial zeta_polynomial(const Composition& sigma) {
  const int n = sigma.n();
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(static_cast<std::size_t>(n) + 2);
  for (int m = 0; m <= n + 1; ++m)
    points.emplace_back(Rational(m + 1), Rational(zeta_value(sigma, m)));
  ExactPolynomial poly = interpolate(points);
  // n+2 samples overdetermine a degree <= n polynomial; a higher degree
  // would mean the multichain counts are not polynomial of the expected
  // order.
  if (poly.degree() > n)
    throw std::logic_error("multichain polynomial of " + sigma.to_string() +
                           " exceeds degree " + std::to_string(n));
  return poly;
}

BProfile dilate_to_bprofile(const Composition& sigma, int m, const LatticePoint& a) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (!contains(sigma, a, m))
    throw std::invalid_argument("point is not in the " + std::to_string(m) +
                                "-fold dilate of " + sigma.to_string());
  BProfile profile;
  profile.m = m;
  profile.b.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(sigma.n()), 0);
  long long prefix = 0;
  for (int c : a.coords) {
    prefix += c;
    if (prefix >= 1) ++profile.b[static_cast<std::size_t>(prefix) - 1];
  }
  return profile;
}

LatticePoint bprofile_to_dilate(const Composition& sigma, const BProfile& profile) {
  const int n = sigma.n();
  const int m = profile.m;
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (profile.b.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(n))
    throw std::invalid_argument("profile has " + std::to_string(profile.b.size()) +
                                " entries, expected " + std::to_string(m * n));
  long long total = 0;
  for (int v : profile.b) {
    if (v < 0) throw std::invalid_argument("profile entries must be >= 0");
    total += v;
  }
  if (total > n)
    throw std::invalid_argument("profile total " + std::to_string(total) +
                                " exceeds n = " + std::to_string(n));
  const auto& sums = sigma.partial_sums();
  for (int i = 1; i < sigma.k(); ++i) {
    long long tail = 0;
    for (std::size_t j = static_cast<std::size_t>(sums[static_cast<std::size_t>(i)]) *
                         static_cast<std::size_t>(m);
         j < profile.b.size(); ++j)
      tail += profile.b[j];
    if (tail > n - sums[static_cast<std::size_t>(i)])
      throw std::invalid_argument("profile tail past " + std::to_string(sums[i] * m) +
                                  " exceeds " + std::to_string(n - sums[i]));
  }
  // Prefix values in nondecreasing order: n - total zeros, then j
  // repeated b[j-1] times. Differences recover the point.
  LatticePoint a;
  a.coords.reserve(static_cast<std::size_t>(n));
  long long prev = 0;
  long long zeros = n - total;
  for (long long i = 0; i < zeros; ++i) a.coords.push_back(0);
  for (std::size_t j = 0; j < profile.b.size(); ++j)
    for (int r = 0; r < profile.b[j]; ++r) {
      a.coords.push_back(static_cast<int>(j + 1 - prev));
      prev = static_cast<long long>(j) + 1;
    }
  if (!contains(sigma, a, m))
    throw std::logic_error("rebuilt point escaped the dilate");
  return a;
}

ExactPolynomial hstar_from_series(const Composition& sigma) {
  const int n = sigma.n();
  std::vector<BigInt> ehr(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) ehr[static_cast<std::size_t>(m)] = ehrhart_ksum(sigma, m);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    BigInt acc = 0;
    for (int j = 0; j <= i; ++j) {
      const BigInt term = binomial(BigInt(n + 1), j) * ehr[static_cast<std::size_t>(i - j)];
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0)
      throw std::logic_error("series numerator of " + sigma.to_string() +
                             " has a negative coefficient at " + std::to_string(i));
    if (i == 0 && acc != 1)
      throw std::logic_error("series numerator of " + sigma.to_string() +
                             " does not start at 1");
    coeffs[static_cast<std::size_t>(i)] = Rational(acc);
  }
  return ExactPolynomial(std::move(coeffs));
}

bool word_admissible(const Composition& sigma, const Word& w) {
  const int n = sigma.n();
  if (static_cast<int>(w.letters.size()) != n) return false;
  for (int v : w.letters)
    if (v < 1 || v > n) return false;
  for (int i = 1; i <= sigma.k(); ++i) {
    const int s = sigma.partial_sum(i);
    int le = 0;
    for (int v : w.letters)
      if (v <= s) ++le;
    if (le < s) return false;
  }
  return true;
}

ExactPolynomial hstar_words(const Composition& sigma) {
  const int n = sigma.n();
  if (n > guards().words_n)
    throw_guard("hstar_words", "n", n, "words", guards().words_n);
  const int k = sigma.k();
  const auto& sums = sigma.partial_sums();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> le(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int depth, int prev, int asc) -> void {
    if (depth == n) {
      ++counts[static_cast<std::size_t>(asc)];
      return;
    }
    for (int v = 1; v <= n; ++v) {
      for (int i = 0; i < k; ++i)
        if (v <= sums[static_cast<std::size_t>(i) + 1]) ++le[static_cast<std::size_t>(i)];
      bool feasible = true;
      for (int i = 0; i + 1 < k; ++i)
        if (le[static_cast<std::size_t>(i)] + (n - depth - 1) <
            sums[static_cast<std::size_t>(i) + 1]) {
          feasible = false;
          break;
        }
      if (feasible) self(self, depth + 1, v, asc + (prev < v ? 1 : 0));
      for (int i = 0; i < k; ++i)
        if (v <= sums[static_cast<std::size_t>(i) + 1]) --le[static_cast<std::size_t>(i)];
    }
  };
  rec(rec, 0, 1, 0);
  return ExactPolynomial::from_counts(counts);
}

ExactPolynomial el_chain_h(const Composition& sigma) {
  const int n = sigma.n();
  if (n > guards().chains_n)
    throw_guard("el_chain_h", "n", n, "chains", guards().chains_n);
  // The poset of the reversed composition realized by suffix
  // constraints: a_{s_i+1} + ... + a_n <= n - s_i for 0 <= i < k. On
  // this copy the unique rising maximal chain raises coordinate 1 at
  // every step.
  const Composition rho = sigma.reversed();
  const auto& s = rho.partial_sums();
  const int k = rho.k();
  std::vector<int> suffix(static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int depth, int last, int des) -> void {
    if (depth == n) {
      ++counts[static_cast<std::size_t>(des + (last > 1 ? 1 : 0))];
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      for (int i = 0; i < k; ++i)
        if (s[static_cast<std::size_t>(i)] < c &&
            suffix[static_cast<std::size_t>(i)] + 1 > n - s[static_cast<std::size_t>(i)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int i = 0; i < k; ++i)
        if (s[static_cast<std::size_t>(i)] < c) ++suffix[static_cast<std::size_t>(i)];
      self(self, depth + 1, c, des + (depth > 0 && last > c ? 1 : 0));
      for (int i = 0; i < k; ++i)
        if (s[static_cast<std::size_t>(i)] < c) --suffix[static_cast<std::size_t>(i)];
    }
  };
  rec(rec, 0, 0, 0);
  return ExactPolynomial::from_counts(counts);
}

} // namespace compoly
