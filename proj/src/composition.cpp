#include "compoly/composition.hpp"

#include <charconv>
#include <utility>

namespace compoly {

guard_error::guard_error(const std::string& what_arg, std::string guard, long limit)
    : std::runtime_error(what_arg), guard_(std::move(guard)), limit_(limit) {}

Guards& guards() {
  static Guards g;
  return g;
}

void raise_guards_to(int n) {
  Guards& g = guards();
  auto lift = [n](int& limit) {
    if (limit < n) limit = n;
  };
  lift(g.construct);
  lift(g.enumerate_n);
  lift(g.oracle_n);
  lift(g.oracle_m);
  lift(g.brute_zeta_n);
  lift(g.brute_zeta_m);
  lift(g.words_n);
  lift(g.chains_n);
}

namespace {

[[noreturn]] void throw_construct_guard(long long total) {
  throw guard_error("composition of " + std::to_string(total) +
                        " exceeds the 'construct' size guard (limit " +
                        std::to_string(guards().construct) + ")",
                    "construct", guards().construct);
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  long long total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("part " + std::to_string(i + 1) + " must be >= 1");
    total += parts_[i];
    if (total > guards().construct) throw_construct_guard(total);
  }
  n_ = static_cast<int>(total);
  sums_.reserve(parts_.size() + 1);
  sums_.push_back(0);
  for (int r : parts_) sums_.push_back(sums_.back() + r);
  bounds_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 1; i < sums_.size(); ++i)
    for (int j = sums_[i - 1] + 1; j <= sums_[i]; ++j)
      bounds_[static_cast<std::size_t>(j)] = sums_[i];
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  int index = 0;
  long long total = 0;
  if (text.empty()) throw std::invalid_argument("empty composition");
  while (true) {
    ++index;
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = comma == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    const std::string where = "part " + std::to_string(index);
    if (tok.empty()) throw std::invalid_argument(where + ": empty token");
    long value = 0;
    const char* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || p != end)
      throw std::invalid_argument(where + ": '" + std::string(tok) +
                                  "' is not a positive integer");
    if (value < 1) throw std::invalid_argument(where + ": parts must be >= 1");
    total += value;
    if (total > guards().construct) throw_construct_guard(total);
    parts.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Composition> all_compositions(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > guards().construct)
    throw guard_error("n = " + std::to_string(n) +
                          " exceeds the 'construct' size guard (limit " +
                          std::to_string(guards().construct) + ")",
                      "construct", guards().construct);
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int r = 1; r <= rem; ++r) {
      cur.push_back(r);
      self(self, rem - r);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

} // namespace compoly
