#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "compoly/composition.hpp"

#include <set>
#include <vector>

using compoly::all_compositions;
using compoly::Composition;
using compoly::guard_error;

namespace {

struct GuardSnapshot {
  compoly::Guards saved = compoly::guards();
  ~GuardSnapshot() { compoly::guards() = saved; }
};

} // namespace

TEST_CASE("parse splits parts and caches partial sums") {
  const Composition c = Composition::parse("3,4,2");
  CHECK(c.parts() == std::vector<int>{3, 4, 2});
  CHECK(c.n() == 9);
  CHECK(c.k() == 3);
  CHECK(c.partial_sums() == std::vector<int>{0, 3, 7, 9});
  CHECK(c.to_string() == "3,4,2");
}

TEST_CASE("parse tolerates spaces and single parts") {
  CHECK(Composition::parse(" 2 , 1 ") == Composition({2, 1}));
  CHECK(Composition::parse("1").n() == 1);
  CHECK(Composition::parse("16").k() == 1);
}

TEST_CASE("prefix bounds snap up to the next partial sum") {
  const Composition c = Composition::parse("3,4,2");
  for (int j = 1; j <= 3; ++j) CHECK(c.prefix_bound(j) == 3);
  for (int j = 4; j <= 7; ++j) CHECK(c.prefix_bound(j) == 7);
  for (int j = 8; j <= 9; ++j) CHECK(c.prefix_bound(j) == 9);
}

TEST_CASE("parse reports the offending token position") {
  CHECK_THROWS_WITH_AS(Composition::parse("0,2"), "part 1: parts must be >= 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Composition::parse("2,,1"), "part 2: empty token",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Composition::parse("2,x"), "part 2: 'x' is not a positive integer",
                       std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("-3"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("2,"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("1.5"), std::invalid_argument);
}

TEST_CASE("construction rejects empty and non-positive parts") {
  CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
}

TEST_CASE("totals beyond the construction guard are rejected") {
  CHECK_THROWS_AS(Composition::parse("17"), guard_error);
  CHECK_THROWS_AS(Composition::parse("9,8"), guard_error);
  try {
    Composition::parse("100");
    FAIL("expected a guard error");
  } catch (const guard_error& e) {
    CHECK(e.guard_name() == "construct");
    CHECK(e.limit() == 16);
  }
}

TEST_CASE("raised guards admit larger totals") {
  GuardSnapshot snapshot;
  compoly::raise_guards_to(20);
  CHECK(Composition::parse("17").n() == 17);
  CHECK(compoly::guards().construct == 20);
  // Raising never lowers a limit.
  compoly::raise_guards_to(3);
  CHECK(compoly::guards().construct == 20);
}

TEST_CASE("reversal flips the part order") {
  CHECK(Composition::parse("3,4,2").reversed() == Composition({2, 4, 3}));
  CHECK(Composition::parse("5").reversed() == Composition({5}));
  for (const Composition& c : all_compositions(6)) CHECK(c.reversed().reversed() == c);
}

TEST_CASE("all compositions of 3 in ascending lexicographic order") {
  const auto cs = all_compositions(3);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == Composition({1, 1, 1}));
  CHECK(cs[1] == Composition({1, 2}));
  CHECK(cs[2] == Composition({2, 1}));
  CHECK(cs[3] == Composition({3}));
}

TEST_CASE("composition counts, totals, and distinctness") {
  for (int n = 1; n <= 7; ++n) {
    const auto cs = all_compositions(n);
    CHECK(cs.size() == (std::size_t(1) << (n - 1)));
    std::set<std::vector<int>> seen;
    for (const Composition& c : cs) {
      CHECK(c.n() == n);
      seen.insert(c.parts());
    }
    CHECK(seen.size() == cs.size());
  }
  CHECK_THROWS_AS(all_compositions(0), std::invalid_argument);
  CHECK_THROWS_AS(all_compositions(17), guard_error);
}

TEST_CASE("text round trip") {
  for (const Composition& c : all_compositions(5))
    CHECK(Composition::parse(c.to_string()) == c);
}
