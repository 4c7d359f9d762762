#include "doctest.h"

#include <optional>
#include <stdexcept>

#include "rectlift/roots.hpp"

using namespace rectlift;

TEST_SUITE_BEGIN("roots");

TEST_CASE("construction checks the interval against the rank") {
  CHECK_NOTHROW(PosRoot(1, 4, 4));
  CHECK_NOTHROW(PosRoot(3, 3, 7));
  CHECK_THROWS_AS(PosRoot(0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(PosRoot(2, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(PosRoot(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(PosRoot(1, 1, 0), std::invalid_argument);
}

TEST_CASE("height counts the simple roots in the sum") {
  CHECK(PosRoot(2, 2, 5).height() == 1);
  CHECK(PosRoot(1, 5, 5).height() == 5);
}

TEST_CASE("printing and parsing round-trip, with the simple-root short form") {
  CHECK(to_string(PosRoot(2, 2, 4)) == "a[2]");
  CHECK(to_string(PosRoot(1, 3, 4)) == "a[1,3]");
  CHECK(to_string(SignedRoot{PosRoot(1, 3, 4), true}) == "-a[1,3]");
  CHECK(parse_root("a[2]", 4) == PosRoot(2, 2, 4));
  CHECK(parse_root("a[1,3]", 4) == PosRoot(1, 3, 4));
  for (const PosRoot& a : positive_roots(6)) CHECK(parse_root(to_string(a), 6) == a);
  CHECK_THROWS_AS(parse_root("a[0]", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("a[2,9]", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("b[1]", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("a[1,", 4), std::invalid_argument);
}

TEST_CASE("dominance is interval containment") {
  CHECK(leq(PosRoot(2, 3, 4), PosRoot(1, 3, 4)));
  CHECK(leq(PosRoot(2, 3, 4), PosRoot(2, 3, 4)));
  CHECK_FALSE(leq(PosRoot(1, 3, 4), PosRoot(2, 4, 4)));
  CHECK_FALSE(leq(PosRoot(1, 1, 4), PosRoot(2, 4, 4)));
}

TEST_CASE("join and meet of overlapping supports") {
  PosRoot a(1, 3, 4), b(2, 4, 4);
  CHECK(join(a, b) == PosRoot(1, 4, 4));
  REQUIRE(meet(a, b).has_value());
  CHECK(*meet(a, b) == PosRoot(2, 3, 4));
}

TEST_CASE("meet of disjoint supports does not exist") {
  CHECK_FALSE(meet(PosRoot(1, 1, 4), PosRoot(3, 4, 4)).has_value());
  CHECK_FALSE(meet(PosRoot(1, 2, 4), PosRoot(3, 3, 4)).has_value());
}

TEST_CASE("support connectivity allows adjacency, meets do not") {
  PosRoot a(1, 2, 4), b(3, 4, 4);
  CHECK(supports_connected(a, b));
  CHECK_FALSE(meet(a, b).has_value());
  CHECK(join(a, b) == PosRoot(1, 4, 4));
  CHECK_FALSE(supports_connected(PosRoot(1, 1, 4), PosRoot(3, 4, 4)));
}

TEST_CASE("operations refuse mixed ranks") {
  PosRoot a(1, 1, 3), b(1, 1, 4);
  CHECK_THROWS_AS((void)leq(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)join(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)meet(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)supports_connected(a, b), std::invalid_argument);
}

TEST_CASE("positive root lists are complete and bounded by the highest root") {
  for (int n = 1; n <= 6; ++n) {
    auto all = positive_roots(n);
    CHECK(static_cast<int>(all.size()) == n * (n + 1) / 2);
    PosRoot theta = highest_root(n);
    CHECK(theta == PosRoot(1, n, n));
    for (const PosRoot& a : all) CHECK(leq(a, theta));
  }
}

TEST_CASE("join is the least upper bound, brute force over small ranks") {
  for (int n = 1; n <= 6; ++n) {
    auto all = positive_roots(n);
    for (const PosRoot& a : all)
      for (const PosRoot& b : all) {
        PosRoot j = join(a, b);
        CHECK(leq(a, j));
        CHECK(leq(b, j));
        for (const PosRoot& c : all)
          if (leq(a, c) && leq(b, c)) CHECK(leq(j, c));
      }
  }
}

TEST_CASE("meet exists exactly when supports overlap and is the greatest lower bound") {
  for (int n = 1; n <= 6; ++n) {
    auto all = positive_roots(n);
    for (const PosRoot& a : all)
      for (const PosRoot& b : all) {
        auto m = meet(a, b);
        bool overlap = std::max(a.i, b.i) <= std::min(a.j, b.j);
        CHECK(m.has_value() == overlap);
        if (!m) continue;
        CHECK(leq(*m, a));
        CHECK(leq(*m, b));
        for (const PosRoot& c : all)
          if (leq(c, a) && leq(c, b)) CHECK(leq(c, *m));
      }
  }
}

TEST_CASE("heights add up across a join/meet pair") {
  for (int n = 1; n <= 5; ++n) {
    auto all = positive_roots(n);
    for (const PosRoot& a : all)
      for (const PosRoot& b : all) {
        auto m = meet(a, b);
        if (!m) continue;
        CHECK(join(a, b).height() + m->height() == a.height() + b.height());
      }
  }
}

TEST_SUITE_END();
