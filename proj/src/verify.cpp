#include "compoly/verify.hpp"

#include "compoly/ehrhart_zeta.hpp"
#include "compoly/lattice_enum.hpp"
#include "compoly/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace compoly {

namespace {

using Detail = std::optional<std::string>;

std::string join64(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Detail check_gamma(const Composition& sigma) {
  const ExactPolynomial h = h_polynomial(sigma);
  const GammaVector direct = gamma_direct(sigma);
  if (direct.values.front() != 1) return "gamma_0 = " + std::to_string(direct.values.front());
  for (std::int64_t v : direct.values)
    if (v < 0) return "negative gamma entry in [" + join64(direct.values) + "]";
  const auto expanded = gamma_expand(h, sigma.n());
  if (!expanded) return std::string("h-polynomial is not palindromic");
  if (!(ExactPolynomial::from_counts(direct.values) == *expanded))
    return "direct count [" + join64(direct.values) + "] differs from expansion " +
           expanded->pretty();
  return std::nullopt;
}

Detail check_shape(const Composition& sigma) {
  const HVector h = h_vector(sigma);
  if (h.values.front() != 1 || h.values.back() != 1)
    return "h-vector [" + join64(h.values) + "] does not start and end at 1";
  const ExactPolynomial p = ExactPolynomial::from_counts(h.values);
  if (!is_palindromic(p, sigma.n()))
    return "h-vector [" + join64(h.values) + "] is not palindromic";
  if (!is_unimodal(p)) return "h-vector [" + join64(h.values) + "] is not unimodal";
  return std::nullopt;
}

Detail check_reversal(const Composition& sigma) {
  const HVector a = h_vector(sigma);
  const HVector b = h_vector(sigma.reversed());
  if (!(a == b))
    return "h-vector [" + join64(a.values) + "] changes under reversal to [" +
           join64(b.values) + "]";
  return std::nullopt;
}

Detail check_ehr_zeta(const Composition& sigma) {
  const Composition rev = sigma.reversed();
  const int n = sigma.n();
  for (int m = 0; m <= n + 1; ++m) {
    const BigInt lhs = ehrhart_ksum(sigma, m);
    const BigInt rhs = zeta_value(rev, m);
    if (lhs != rhs)
      return "dilate count " + to_string(lhs) + " != multichain count " + to_string(rhs) +
             " at m = " + std::to_string(m);
  }
  if (n <= guards().oracle_n)
    for (int m = 0; m <= std::min(2, guards().oracle_m); ++m)
      if (ehrhart_count_oracle(sigma, m) != ehrhart_ksum(sigma, m))
        return "closed form differs from direct enumeration at m = " + std::to_string(m);
  if (n <= guards().brute_zeta_n)
    for (int m = 0; m <= std::min(2, guards().brute_zeta_m); ++m)
      if (zeta_brute(rev, m) != zeta_value(rev, m))
        return "multichain routes disagree at m = " + std::to_string(m);
  if (!(ehrhart_polynomial(sigma) == zeta_polynomial(rev).shifted_arg(Rational(1))))
    return std::string("counting polynomial differs from the shifted multichain polynomial");
  return std::nullopt;
}

Detail check_hstar(const Composition& sigma) {
  const ExactPolynomial series = hstar_from_series(sigma);
  const ExactPolynomial words = hstar_words(sigma);
  if (!(series == words))
    return "series numerator " + series.pretty() + " differs from word count " +
           words.pretty();
  return std::nullopt;
}

Detail check_el_chains(const Composition& sigma) {
  const ExactPolynomial chains = el_chain_h(sigma.reversed());
  const ExactPolynomial series = hstar_from_series(sigma);
  if (!(chains == series))
    return "chain descent count " + chains.pretty() + " differs from series numerator " +
           series.pretty();
  return std::nullopt;
}

Detail check_bijection(const Composition& sigma) {
  for (int m = 1; m <= 2; ++m) {
    std::set<std::vector<int>> seen;
    std::int64_t count = 0;
    Detail failure;
    for_each_dilate_point(sigma, m, [&](const std::vector<int>& a) {
      if (failure) return;
      const LatticePoint pt{a};
      const BProfile profile = dilate_to_bprofile(sigma, m, pt);
      if (!(bprofile_to_dilate(sigma, profile) == pt)) {
        failure = "profile does not invert at m = " + std::to_string(m);
        return;
      }
      seen.insert(profile.b);
      ++count;
    });
    if (failure) return failure;
    if (static_cast<std::int64_t>(seen.size()) != count)
      return "profiles collide at m = " + std::to_string(m);
    if (BigInt(static_cast<long>(count)) != ehrhart_ksum(sigma, m))
      return "profile count differs from the closed form at m = " + std::to_string(m);
  }
  return std::nullopt;
}

Detail check_roots(const Composition& sigma) {
  const ExactPolynomial p = ehrhart_polynomial(sigma);
  const RealRootReport rep = sturm_report(p, Rational(-1), Rational(0));
  if (!rep.all_real)
    return "counting polynomial " + p.pretty() + " has a non-real root";
  if (rep.roots_in_interval != rep.distinct_root_count)
    return "counting polynomial " + p.pretty() + " has a root outside [-1,0]";
  return std::nullopt;
}

Detail check_consistency(const Composition& sigma) {
  const int n = sigma.n();
  const HVector h = h_vector(sigma);
  BigInt hsum = 0;
  for (std::int64_t v : h.values) hsum += BigInt(static_cast<long>(v));
  if (hsum != ehrhart_ksum(sigma, 1))
    return "point count " + to_string(hsum) + " differs from the m = 1 dilate count";
  const ExactPolynomial hstar = hstar_from_series(sigma);
  Rational hstar_sum(0);
  for (int i = 0; i <= hstar.degree(); ++i) hstar_sum += hstar.coeff(i);
  const Rational volume_scaled =
      Rational(factorial(n)) * ehrhart_polynomial(sigma).leading_coefficient();
  if (hstar_sum != volume_scaled)
    return "numerator total " + to_string(hstar_sum) + " differs from n! * leading term " +
           to_string(volume_scaled);
  return std::nullopt;
}

struct CheckDef {
  const char* name;
  std::function<int()> cap;
  std::function<Detail(const Composition&)> fn;
};

const std::vector<CheckDef>& check_defs() {
  static const std::vector<CheckDef> defs = {
      {"gamma", [] { return guards().enumerate_n; }, check_gamma},
      {"shape", [] { return guards().enumerate_n; }, check_shape},
      {"reversal", [] { return guards().enumerate_n; }, check_reversal},
      {"ehr-zeta", [] { return guards().enumerate_n; }, check_ehr_zeta},
      {"hstar", [] { return guards().words_n; }, check_hstar},
      {"el-chains", [] { return guards().chains_n; }, check_el_chains},
      {"bijection", [] { return 4; }, check_bijection},
      {"roots", [] { return guards().enumerate_n; }, check_roots},
      {"consistency", [] { return guards().enumerate_n; }, check_consistency},
  };
  return defs;
}

} // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : check_defs()) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

std::vector<CheckOutcome> run_checks(int n, const std::vector<std::string>& only) {
  for (const auto& name : only)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      std::string valid;
      for (const auto& v : check_names()) {
        if (!valid.empty()) valid += ", ";
        valid += v;
      }
      throw std::invalid_argument("unknown check '" + name + "' (valid: " + valid + ")");
    }
  const std::vector<Composition> all = all_compositions(n);
  std::vector<CheckOutcome> outcomes;
  for (const auto& def : check_defs()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), def.name) == only.end())
      continue;
    CheckOutcome outcome;
    outcome.check = def.name;
    const int cap = def.cap();
    if (n > cap) {
      outcome.skipped = true;
      outcome.skip_reason = "n = " + std::to_string(n) + " exceeds the check limit " +
                            std::to_string(cap);
      outcomes.push_back(std::move(outcome));
      continue;
    }
    for (const Composition& sigma : all) {
      if (Detail d = def.fn(sigma))
        outcome.failures.push_back(sigma.to_string() + ": " + *d);
      ++outcome.checked;
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

} // namespace compoly
