#include "compoly/composition.hpp"
#include "compoly/ehrhart_zeta.hpp"
#include "compoly/lattice_enum.hpp"
#include "compoly/polynomial.hpp"
#include "compoly/rational.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace compoly;

namespace {

bool expect(bool cond, bool& ok, const std::string& detail) {
  if (!cond) {
    std::cerr << "  failed: " << detail << "\n";
    ok = false;
  }
  return cond;
}

std::string at(const Composition& sigma) { return " at (" + sigma.to_string() + ")"; }

// h_i = C(n,i)^2 and gamma_i = C(n,i)C(n-i,i) for one-part compositions.
bool one_part_closed_forms() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const Composition sigma({n});
    const HVector h = h_vector(sigma);
    expect(static_cast<int>(h.values.size()) == n + 1, ok, "h length" + at(sigma));
    for (int i = 0; i <= n; ++i)
      expect(BigInt(h.values[static_cast<std::size_t>(i)]) == binomial(n, i) * binomial(n, i),
             ok, "h[" + std::to_string(i) + "]" + at(sigma));
    const GammaVector g = gamma_direct(sigma);
    for (int i = 0; i < static_cast<int>(g.values.size()); ++i)
      expect(BigInt(g.values[static_cast<std::size_t>(i)]) ==
                 binomial(n, i) * binomial(n - i, i),
             ok, "gamma[" + std::to_string(i) + "]" + at(sigma));
  }
  return ok;
}

// Point total = Catalan, h = Narayana, gamma = its known expansion, all
// multiplied through by the denominators to stay in integers.
bool all_ones_closed_forms() {
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    const Composition sigma(std::vector<int>(static_cast<std::size_t>(n), 1));
    const HVector h = h_vector(sigma);
    BigInt total = 0;
    for (std::int64_t v : h.values) total += v;
    expect(total * (n + 2) == binomial(2 * n + 2, n + 1), ok, "Catalan total" + at(sigma));
    for (int i = 0; i <= n; ++i)
      expect(BigInt(h.values[static_cast<std::size_t>(i)]) * (i + 1) ==
                 binomial(n, i) * binomial(n + 1, i),
             ok, "Narayana h[" + std::to_string(i) + "]" + at(sigma));
    const GammaVector g = gamma_direct(sigma);
    for (int i = 0; i < static_cast<int>(g.values.size()); ++i)
      expect(BigInt(g.values[static_cast<std::size_t>(i)]) * (i + 1) ==
                 binomial(n, i) * binomial(n - i, i),
             ok, "gamma[" + std::to_string(i) + "]" + at(sigma));
  }
  return ok;
}

// Direct gamma counting agrees with peeling the expansion off the
// h-polynomial, with nonnegative entries, for every composition with
// n <= 7; palindromic and unimodal come along for free.
bool gamma_sweep() {
  bool ok = true;
  int visited = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Composition& sigma : all_compositions(n)) {
      ++visited;
      const ExactPolynomial h = h_polynomial(sigma);
      const GammaVector direct = gamma_direct(sigma);
      for (std::int64_t v : direct.values)
        expect(v >= 0, ok, "negative gamma" + at(sigma));
      const auto expanded = gamma_expand(h, n);
      if (expect(expanded.has_value(), ok, "expansion missing" + at(sigma)))
        expect(*expanded == ExactPolynomial::from_counts(direct.values), ok,
               "direct vs expanded gamma" + at(sigma));
      expect(is_palindromic(h, n), ok, "palindromic h" + at(sigma));
      expect(is_unimodal(h), ok, "unimodal h" + at(sigma));
    }
  expect(visited == 127, ok, "composition sweep size, expected 127");
  return ok;
}

bool reversal_symmetry() {
  bool ok = true;
  for (int n = 1; n <= 7; ++n)
    for (const Composition& sigma : all_compositions(n))
      expect(h_vector(sigma) == h_vector(sigma.reversed()), ok,
             "h under reversal" + at(sigma));
  return ok;
}

// Dilate counts equal multichain counts of the reversed composition at
// every m in 0..n+1, with each side confirmed by its brute route where
// feasible, and the polynomial identity Ehr(t) = Z(t+1) on top.
bool dilate_vs_multichain() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n)
    for (const Composition& sigma : all_compositions(n)) {
      const Composition rev = sigma.reversed();
      for (int m = 0; m <= n + 1; ++m) {
        const BigInt closed = ehrhart_ksum(sigma, m);
        expect(closed == zeta_value(rev, m), ok,
               "dilate vs multichain, m=" + std::to_string(m) + at(sigma));
        if (m <= 3)
          expect(ehrhart_count_oracle(sigma, m) == closed, ok,
                 "oracle vs closed form, m=" + std::to_string(m) + at(sigma));
        if (n <= 5 && m <= 3)
          expect(zeta_brute(rev, m) == zeta_value(rev, m), ok,
                 "brute vs product multichains, m=" + std::to_string(m) + at(sigma));
      }
      expect(ehrhart_polynomial(sigma) ==
                 zeta_polynomial(rev).shifted_arg(Rational(1)),
             ok, "polynomial shift identity" + at(sigma));
    }
  return ok;
}

bool hstar_routes() {
  bool ok = true;
  for (int n = 1; n <= 7; ++n)
    for (const Composition& sigma : all_compositions(n))
      expect(hstar_from_series(sigma) == hstar_words(sigma), ok,
             "series vs words" + at(sigma));
  expect(hstar_from_series(Composition({1, 1})) == ExactPolynomial::from_counts({1, 2}),
         ok, "spot value at (1,1)");
  return ok;
}

bool chain_route() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    for (const Composition& sigma : all_compositions(n))
      expect(el_chain_h(sigma.reversed()) == hstar_from_series(sigma), ok,
             "chain descents vs series" + at(sigma));
  return ok;
}

// Every dilate point maps to a distinct realizable profile and back,
// and the image is the whole profile set: its size matches the count.
bool profile_bijection() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (const Composition& sigma : all_compositions(n))
      for (int m = 1; m <= 2; ++m) {
        std::set<std::vector<int>> profiles;
        long long count = 0;
        for_each_dilate_point(sigma, m, [&](const std::vector<int>& coords) {
          const LatticePoint a{coords};
          const BProfile profile = dilate_to_bprofile(sigma, m, a);
          expect(bprofile_to_dilate(sigma, profile) == a, ok, "round trip" + at(sigma));
          profiles.insert(profile.b);
          ++count;
        });
        expect(static_cast<long long>(profiles.size()) == count, ok,
               "profiles collide" + at(sigma));
        expect(BigInt(static_cast<long>(count)) == ehrhart_ksum(sigma, m), ok,
               "image size vs count, m=" + std::to_string(m) + at(sigma));
      }
  return ok;
}

// One-part counting polynomials factor with roots -j/n; across all
// compositions with n <= 6 every root must be real and inside [-1,0].
// A failure here is a counterexample to the real-rootedness conjecture
// and must be loud.
bool root_probe() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const Composition sigma({n});
    const ExactPolynomial p = ehrhart_polynomial(sigma);
    const RealRootReport report = sturm_report(p, Rational(-1), Rational(0));
    expect(report.all_real, ok, "all roots real" + at(sigma));
    expect(report.distinct_root_count == n, ok, "distinct root count" + at(sigma));
    expect(report.roots_in_interval == n, ok, "roots inside [-1,0]" + at(sigma));
    expect(static_cast<int>(report.isolating_intervals.size()) == n, ok,
           "isolating interval count" + at(sigma));
    for (int j = 1; j <= n; ++j) {
      const Rational r = make_rational(-j, n);
      expect(p(r) == 0, ok, "-" + std::to_string(j) + "/" + std::to_string(n) +
                                " is a root" + at(sigma));
      int containing = 0;
      for (const RationalInterval& iv : report.isolating_intervals) {
        const bool inside = iv.lo == iv.hi ? r == iv.lo : iv.lo < r && r <= iv.hi;
        if (inside) ++containing;
      }
      expect(containing == 1, ok, "root isolated once" + at(sigma));
    }
  }
  int checked = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Composition& sigma : all_compositions(n)) {
      ++checked;
      const RealRootReport report =
          sturm_report(ehrhart_polynomial(sigma), Rational(-1), Rational(0));
      if (!report.all_real || report.roots_in_interval != report.distinct_root_count) {
        std::cerr << "  COUNTEREXAMPLE: counting polynomial of (" << sigma.to_string()
                  << ") has a root outside [-1,0] or off the real line\n";
        ok = false;
      }
    }
  std::cout << "  probed " << checked
            << " counting polynomials; every root real and inside [-1,0]\n";
  return ok;
}

bool cross_route_consistency() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n)
    for (const Composition& sigma : all_compositions(n)) {
      const ExactPolynomial ehr = ehrhart_polynomial(sigma);
      const HVector h = h_vector(sigma);
      BigInt h_total = 0;
      for (std::int64_t v : h.values) h_total += v;
      expect(ehr(Rational(1)) == Rational(h_total), ok, "value at 1 vs point total" + at(sigma));
      const ExactPolynomial hs = hstar_from_series(sigma);
      expect(hs.coeff(0) == 1, ok, "constant term of h-star" + at(sigma));
      Rational hs_total = 0;
      for (const Rational& c : hs.coeffs()) hs_total += c;
      expect(hs_total == Rational(factorial(n)) * ehr.leading_coefficient(), ok,
             "h-star total vs normalized volume" + at(sigma));
    }
  return ok;
}

} // namespace

int main() {
  std::cout << std::fixed << std::setprecision(2);
  int failures = 0;
  const auto run = [&failures](int number, const std::string& label, double budget_s,
                               bool (*body)()) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      std::cerr << "  unexpected exception: " << e.what() << "\n";
      ok = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && elapsed >= budget_s) {
      std::cerr << "  over time budget: " << elapsed << " s, limit " << budget_s << " s\n";
      ok = false;
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label
              << " (" << elapsed << " s)\n";
    if (!ok) ++failures;
  };

  run(1, "one-part h and gamma closed forms", 1.0, one_part_closed_forms);
  run(2, "all-ones Catalan and Narayana closed forms", 5.0, all_ones_closed_forms);
  run(3, "gamma expansion sweep through n = 7", 60.0, gamma_sweep);
  run(4, "h-vector reversal symmetry through n = 7", 0.0, reversal_symmetry);
  run(5, "dilate counts equal multichain counts through n = 6", 120.0, dilate_vs_multichain);
  run(6, "series and word h-star routes agree through n = 7", 0.0, hstar_routes);
  run(7, "chain descent route matches the h-star series through n = 5", 0.0, chain_route);
  run(8, "dilate point to profile bijection audit", 0.0, profile_bijection);
  run(9, "real-rootedness probe on counting polynomials", 0.0, root_probe);
  run(10, "cross-route count consistency through n = 6", 0.0, cross_route_consistency);

  if (failures != 0) {
    std::cerr << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
