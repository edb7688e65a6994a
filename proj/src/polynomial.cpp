#include "compoly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace compoly {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ExactPolynomial ExactPolynomial::constant(const Rational& c) {
  return ExactPolynomial(std::vector<Rational>{c});
}

ExactPolynomial ExactPolynomial::from_counts(const std::vector<std::int64_t>& counts) {
  std::vector<Rational> coeffs;
  coeffs.reserve(counts.size());
  for (std::int64_t v : counts) coeffs.emplace_back(static_cast<long>(v));
  return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial ExactPolynomial::monomial(const Rational& c, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, Rational(0));
  coeffs.back() = c;
  return ExactPolynomial(std::move(coeffs));
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPolynomial::coeff(int i) const {
  if (i < 0) throw std::out_of_range("negative coefficient index");
  if (static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational ExactPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return ExactPolynomial();
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::shifted_arg(const Rational& c) const {
  const ExactPolynomial lin(std::vector<Rational>{c, Rational(1)});
  ExactPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lin + constant(*it);
  return acc;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) {
  a += b;
  return a;
}

ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) {
  a -= b;
  return a;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ExactPolynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(ExactPolynomial a, const Rational& c) {
  a *= c;
  return a;
}

ExactPolynomial operator-(ExactPolynomial a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

std::string ExactPolynomial::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = abs(c);
    std::string coeff_text;
    if (i == 0 || a != 1) {
      coeff_text = to_string(a);
      if (i > 0 && a.get_den() != 1) coeff_text = "(" + coeff_text + ")";
    }
    out += coeff_text;
    if (i >= 1) {
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> ExactPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  return out;
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& num,
                                                   const ExactPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  ExactPolynomial quot;
  ExactPolynomial rem = num;
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const Rational factor = rem.leading_coefficient() / den.leading_coefficient();
    const ExactPolynomial term =
        ExactPolynomial::monomial(factor, rem.degree() - den.degree());
    quot += term;
    rem -= term * den;
  }
  return {std::move(quot), std::move(rem)};
}

ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b) {
  while (!b.is_zero()) {
    ExactPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading_coefficient();
  return a;
}

ExactPolynomial squarefree_part(const ExactPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  const ExactPolynomial g = poly_gcd(p, p.derivative());
  ExactPolynomial q = divmod(p, g).first;
  q *= Rational(1) / q.leading_coefficient();
  return q;
}

ExactPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate interpolation abscissa " +
                                    to_string(points[i].first));
  // Newton divided differences, in place: after round j, table[j] holds
  // the j-th difference.
  std::vector<Rational> table;
  table.reserve(m);
  for (const auto& pt : points) table.push_back(pt.second);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i)
      table[i] = (table[i] - table[i - 1]) / (points[i].first - points[i - j].first);
  ExactPolynomial result;
  ExactPolynomial basis = ExactPolynomial::constant(Rational(1));
  for (std::size_t j = 0; j < m; ++j) {
    result += basis * table[j];
    basis = basis * ExactPolynomial(std::vector<Rational>{-points[j].first, Rational(1)});
  }
  return result;
}

bool is_palindromic(const ExactPolynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (p.degree() > n) return false;
  for (int i = 0; 2 * i <= n; ++i)
    if (p.coeff(i) != p.coeff(n - i)) return false;
  return true;
}

bool is_unimodal(const ExactPolynomial& p) {
  const auto& c = p.coeffs();
  bool falling = false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i + 1] > c[i]) {
      if (falling) return false;
    } else if (c[i + 1] < c[i]) {
      falling = true;
    }
  }
  return true;
}

namespace {

ExactPolynomial one_plus_t_pow(int e) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(e) + 1);
  for (int j = 0; j <= e; ++j) coeffs.emplace_back(binomial(BigInt(e), j));
  return ExactPolynomial(std::move(coeffs));
}

} // namespace

std::optional<ExactPolynomial> gamma_expand(const ExactPolynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (!is_palindromic(p, n)) return std::nullopt;
  ExactPolynomial residual = p;
  std::vector<Rational> gammas;
  for (int i = 0; 2 * i <= n; ++i) {
    const Rational g = residual.coeff(i);
    gammas.push_back(g);
    if (g != 0) residual -= ExactPolynomial::monomial(g, i) * one_plus_t_pow(n - 2 * i);
  }
  if (!residual.is_zero()) throw std::logic_error("gamma expansion left a nonzero residual");
  return ExactPolynomial(std::move(gammas));
}

ExactPolynomial gamma_rebuild(const ExactPolynomial& gammas, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (2 * gammas.degree() > n)
    throw std::invalid_argument("gamma coefficients extend past the center");
  ExactPolynomial out;
  for (int i = 0; i <= gammas.degree(); ++i) {
    const Rational g = gammas.coeff(i);
    if (g != 0) out += ExactPolynomial::monomial(g, i) * one_plus_t_pow(n - 2 * i);
  }
  return out;
}

namespace {

// Sturm sequence of a squarefree polynomial: ends with a nonzero
// constant, no zero entries.
std::vector<ExactPolynomial> sturm_chain(const ExactPolynomial& q) {
  std::vector<ExactPolynomial> chain{q};
  if (q.degree() >= 1) {
    chain.push_back(q.derivative());
    while (chain.back().degree() >= 1) {
      ExactPolynomial rem = divmod(chain[chain.size() - 2], chain.back()).second;
      if (rem.is_zero()) break;
      chain.push_back(-std::move(rem));
    }
  }
  return chain;
}

int variations_at(const std::vector<ExactPolynomial>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& f : chain) {
    const Rational v = f(x);
    const int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

ExactPolynomial linear_root(const Rational& c) {
  return ExactPolynomial(std::vector<Rational>{-c, Rational(1)});
}

// Distinct roots of squarefree q in the closed interval [lo, hi].
int count_closed(ExactPolynomial q, const Rational& lo, const Rational& hi) {
  int extra = 0;
  if (q(lo) == 0) {
    ++extra;
    q = divmod(q, linear_root(lo)).first;
  }
  if (lo == hi) return extra;
  if (q(hi) == 0) {
    ++extra;
    q = divmod(q, linear_root(hi)).first;
  }
  if (q.degree() < 1) return extra;
  const auto chain = sturm_chain(q);
  return extra + variations_at(chain, lo) - variations_at(chain, hi);
}

// Roots of q strictly exceed -B and fall below B in absolute value.
Rational cauchy_bound(const ExactPolynomial& q) {
  Rational best(0);
  const Rational lead = abs(q.leading_coefficient());
  for (int i = 0; i < q.degree(); ++i) {
    const Rational ratio = abs(q.coeff(i)) / lead;
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

void isolate(const std::vector<ExactPolynomial>& chain, const ExactPolynomial& q,
             const Rational& a, const Rational& b, int va, int vb,
             std::vector<RationalInterval>& out) {
  const int count = va - vb;
  if (count == 0) return;
  if (count == 1) {
    if (q(b) == 0)
      out.push_back({b, b});
    else
      out.push_back({a, b});
    return;
  }
  const Rational mid = (a + b) / 2;
  const int vm = variations_at(chain, mid);
  isolate(chain, q, a, mid, va, vm, out);
  isolate(chain, q, mid, b, vm, vb, out);
}

} // namespace

RealRootReport sturm_report(const ExactPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("root report of the zero polynomial");
  if (lo > hi) throw std::invalid_argument("empty root interval");
  RealRootReport rep;
  rep.degree = p.degree();
  rep.lo = lo;
  rep.hi = hi;
  if (p.degree() == 0) {
    rep.all_real = true;
    return rep;
  }
  const ExactPolynomial q = squarefree_part(p);
  const auto chain = sturm_chain(q);
  const Rational bound = cauchy_bound(q);
  const int v_neg = variations_at(chain, -bound);
  const int v_pos = variations_at(chain, bound);
  rep.distinct_root_count = v_neg - v_pos;
  rep.all_real = rep.distinct_root_count == q.degree();
  rep.roots_in_interval = count_closed(q, lo, hi);
  isolate(chain, q, -bound, bound, v_neg, v_pos, rep.isolating_intervals);
  return rep;
}

} // namespace compoly
