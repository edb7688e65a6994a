#include "compoly/lattice_enum.hpp"

#include <limits>
#include <stdexcept>

namespace compoly {

namespace {

void check_enumeration_guard(const Composition& sigma, const char* op) {
  if (sigma.n() > guards().enumerate_n)
    throw guard_error(std::string(op) + ": n = " + std::to_string(sigma.n()) +
                          " exceeds the 'enumerate' size guard (limit " +
                          std::to_string(guards().enumerate_n) + ")",
                      "enumerate", guards().enumerate_n);
  // Support and prefix-value sets are tracked in 64-bit masks.
  if (sigma.n() > 63)
    throw guard_error("enumeration limited to n <= 63", "enumerate", 63);
}

std::int64_t checked_increment(std::int64_t v, const char* what) {
  if (v == std::numeric_limits<std::int64_t>::max()) throw std::overflow_error(what);
  return v + 1;
}

} // namespace

int LatticePoint::nonzero_count() const {
  int count = 0;
  for (int c : coords)
    if (c != 0) ++count;
  return count;
}

std::vector<int> HTuple::positions() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < entries.size(); ++j)
    if (entries[j] != 0) out.push_back(static_cast<int>(j) + 1);
  return out;
}

std::vector<int> HTuple::values() const {
  std::vector<int> out;
  for (int e : entries)
    if (e != 0) out.push_back(e);
  return out;
}

bool contains(const Composition& sigma, const LatticePoint& x, int dilation) {
  if (dilation < 0) throw std::invalid_argument("negative dilation");
  if (static_cast<int>(x.coords.size()) != sigma.n())
    throw std::invalid_argument("point has " + std::to_string(x.coords.size()) +
                                " coordinates, composition needs " +
                                std::to_string(sigma.n()));
  long long prefix = 0;
  for (int j = 1; j <= sigma.n(); ++j) {
    const int a = x.coords[static_cast<std::size_t>(j - 1)];
    if (a < 0) return false;
    prefix += a;
    if (prefix > static_cast<long long>(dilation) * sigma.prefix_bound(j)) return false;
  }
  return true;
}

std::vector<LatticePoint> enumerate_points(const Composition& sigma) {
  check_enumeration_guard(sigma, "enumerate_points");
  std::vector<LatticePoint> out;
  for_each_dilate_point(sigma, 1, [&](const std::vector<int>& a) {
    out.push_back(LatticePoint{a});
  });
  return out;
}

HTuple encode(const Composition& sigma, const LatticePoint& x) {
  if (!contains(sigma, x))
    throw std::invalid_argument("point is not in the polytope of " + sigma.to_string());
  HTuple h;
  h.entries.assign(x.coords.size(), 0);
  int prefix = 0;
  for (std::size_t j = 0; j < x.coords.size(); ++j) {
    prefix += x.coords[j];
    if (x.coords[j] >= 1) h.entries[j] = prefix;
  }
  return h;
}

bool htuple_admissible(const Composition& sigma, const HTuple& h) {
  if (static_cast<int>(h.entries.size()) != sigma.n()) return false;
  int prev = 0;
  for (std::size_t j = 0; j < h.entries.size(); ++j) {
    const int e = h.entries[j];
    if (e == 0) continue;
    if (e <= prev) return false;
    if (e > sigma.prefix_bound(static_cast<int>(j) + 1)) return false;
    prev = e;
  }
  return true;
}

LatticePoint decode(const Composition& sigma, const HTuple& h) {
  if (!htuple_admissible(sigma, h))
    throw std::invalid_argument("tuple is not admissible for " + sigma.to_string());
  LatticePoint x;
  x.coords.assign(h.entries.size(), 0);
  int prev = 0;
  for (std::size_t j = 0; j < h.entries.size(); ++j) {
    if (h.entries[j] == 0) continue;
    x.coords[j] = h.entries[j] - prev;
    prev = h.entries[j];
  }
  return x;
}

HVector h_vector(const Composition& sigma) {
  check_enumeration_guard(sigma, "h_vector");
  HVector h;
  h.values.assign(static_cast<std::size_t>(sigma.n()) + 1, 0);
  for_each_dilate_point(sigma, 1, [&](const std::vector<int>& a) {
    int nz = 0;
    for (int c : a)
      if (c != 0) ++nz;
    auto& slot = h.values[static_cast<std::size_t>(nz)];
    slot = checked_increment(slot, "h-vector count exceeds 64 bits");
  });
  return h;
}

GammaVector gamma_direct(const Composition& sigma) {
  check_enumeration_guard(sigma, "gamma_direct");
  const int n = sigma.n();
  GammaVector g;
  g.values.assign(static_cast<std::size_t>(n / 2) + 1, 0);
  for_each_dilate_point(sigma, 1, [&](const std::vector<int>& a) {
    std::uint64_t support = 0;
    std::uint64_t prefix_values = 0;
    int prefix = 0;
    int nz = 0;
    for (int j = 0; j < n; ++j) {
      const int c = a[static_cast<std::size_t>(j)];
      prefix += c;
      if (c == 0) continue;
      support |= std::uint64_t(1) << j;
      prefix_values |= std::uint64_t(1) << (prefix - 1);
      ++nz;
    }
    if ((support & prefix_values) == 0) {
      auto& slot = g.values[static_cast<std::size_t>(nz)];
      slot = checked_increment(slot, "gamma count exceeds 64 bits");
    }
  });
  return g;
}

ExactPolynomial h_polynomial(const Composition& sigma) {
  return ExactPolynomial::from_counts(h_vector(sigma).values);
}

LatticePath to_path(const LatticePoint& x) {
  const int n = static_cast<int>(x.coords.size());
  long long total = 0;
  for (int c : x.coords) {
    if (c < 0) throw std::invalid_argument("negative coordinate");
    total += c;
  }
  if (total > n)
    throw std::invalid_argument("coordinate sum " + std::to_string(total) +
                                " exceeds the ambient bound " + std::to_string(n));
  LatticePath path;
  path.steps.reserve(2 * static_cast<std::size_t>(n) + 2);
  path.steps += 'E';
  int height = 0;
  for (int j = 0; j < n; ++j) {
    const int c = x.coords[static_cast<std::size_t>(j)];
    path.steps.append(static_cast<std::size_t>(c), 'N');
    height += c;
    path.steps += 'E';
  }
  path.steps.append(static_cast<std::size_t>(n + 1 - height), 'N');
  return path;
}

LatticePath gamma_path(const Composition& sigma) {
  LatticePoint x;
  x.coords.assign(static_cast<std::size_t>(sigma.n()), 0);
  const auto& sums = sigma.partial_sums();
  const auto& parts = sigma.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    x.coords[static_cast<std::size_t>(sums[i])] = parts[i];
  return to_path(x);
}

bool lies_weakly_below(const LatticePath& path, const LatticePath& upper) {
  if (path.steps.size() != upper.steps.size())
    throw std::invalid_argument("paths of different lengths");
  // Compare heights strip by strip: both words have one 'E' per strip.
  std::size_t i = 0, j = 0;
  int hi = 0, hj = 0;
  while (i < path.steps.size() && j < upper.steps.size()) {
    while (i < path.steps.size() && path.steps[i] == 'N') ++hi, ++i;
    while (j < upper.steps.size() && upper.steps[j] == 'N') ++hj, ++j;
    if (i >= path.steps.size() || j >= upper.steps.size()) break;
    if (hi > hj) return false;
    ++i, ++j;
  }
  return true;
}

int en_corner_count(const LatticePath& path) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i)
    if (path.steps[i] == 'E' && path.steps[i + 1] == 'N') ++count;
  return count;
}

} // namespace compoly
