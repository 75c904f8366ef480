#include <doctest.h>

#include <algorithm>
#include <set>

#include "g2chev/rootsys.hpp"

using namespace g2chev;

TEST_SUITE("rootsys") {

TEST_CASE("canonical order and rendering") {
  const auto& roots = all_roots();
  REQUIRE(roots.size() == 12);

  const char* expected[12] = {"-3a-2b", "-3a-b", "-2a-b", "-a-b", "-a", "-b",
                              "a",      "b",     "a+b",   "2a+b", "3a+b", "3a+2b"};
  for (int i = 0; i < 12; ++i) {
    CHECK(to_string(roots[i]) == expected[i]);
    CHECK(canonical_index(roots[i]) == i);
    CHECK(parse_root(expected[i]) == roots[i]);
  }

  // Strict total order, negatives first.
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) CHECK(root_less(roots[i], roots[j]) == (i < j));
  for (int i = 0; i < 6; ++i) CHECK(height(roots[i]) < 0);
  for (int i = 6; i < 12; ++i) CHECK(height(roots[i]) > 0);
}

TEST_CASE("root predicate covers exactly the twelve roots") {
  int found = 0;
  for (int m = -4; m <= 4; ++m)
    for (int n = -4; n <= 4; ++n)
      if (is_root({m, n})) ++found;
  CHECK(found == 12);
  CHECK(!is_root({0, 0}));
  CHECK(!is_root({2, 0}));
  CHECK(!is_root({1, 2}));
}

TEST_CASE("inner product matches the Gram anchors and splits lengths 2/6") {
  CHECK(inner(kSimpleA, kSimpleA) == 2);
  CHECK(inner(kSimpleA, kSimpleB) == -3);
  CHECK(inner(kSimpleB, kSimpleB) == 6);

  int short_count = 0, long_count = 0;
  for (const Root& r : all_roots()) {
    long long rr = inner(r, r);
    CHECK((rr == 2 || rr == 6));
    (rr == 2 ? short_count : long_count)++;
  }
  CHECK(short_count == 6);
  CHECK(long_count == 6);
}

TEST_CASE("euclidean embedding reproduces the Gram inner product") {
  for (const Root& r : all_roots())
    for (const Root& s : all_roots()) {
      auto x = euclidean(r), y = euclidean(s);
      long long dot = 0;
      for (int k = 0; k < 3; ++k) dot += static_cast<long long>(x[k]) * y[k];
      CHECK(dot == inner(r, s));
    }
}

TEST_CASE("sum is total on root pairs and agrees with is_root") {
  for (const Root& r : all_roots())
    for (const Root& s : all_roots()) {
      auto t = sum(r, s);
      CHECK(t.has_value() == is_root(r + s));
      if (t) CHECK(*t == r + s);
    }
  CHECK(sum(kSimpleA, kSimpleB) == Root{1, 1});
  CHECK(!sum(kSimpleA, kSimpleA));           // 2a is not a root
  CHECK(!sum(kSimpleA, -kSimpleA));          // zero is not a root
  CHECK(sum(Root{3, 1}, kSimpleB) == Root{3, 2});
}

TEST_CASE("chain start p") {
  CHECK(chain_p(kSimpleA, kSimpleB) == 0);            // b - a leaves the system
  CHECK(chain_p(kSimpleA, Root{2, 1}) == 2);          // 2a+b, a+b, b
  CHECK(chain_p(kSimpleB, kSimpleA) == 0);
  CHECK(chain_p(kSimpleB, Root{3, 2}) == 1);          // 3a+2b, 3a+b
  CHECK(chain_p(kSimpleA, Root{3, 1}) == 3);          // the full a-chain through b

  CHECK_THROWS_AS(chain_p(kSimpleA, kSimpleA), std::invalid_argument);
  CHECK_THROWS_AS(chain_p(kSimpleA, -kSimpleA), std::invalid_argument);
  CHECK_THROWS_AS(chain_p(Root{2, 0}, kSimpleB), std::invalid_argument);
}

TEST_CASE("chain length bound: p + q <= 3") {
  // q = top of the r-chain through s; G2 chains have at most 4 roots.
  for (const Root& r : all_roots())
    for (const Root& s : all_roots()) {
      if (s == r || s == -r) continue;
      int p = chain_p(r, s);
      int q = 0;
      while (is_root(s + Root{(q + 1) * r.m, (q + 1) * r.n})) ++q;
      CHECK(p + q <= 3);
      CHECK(p >= 0);
    }
}

TEST_CASE("extraspecial pairs: fixed order and minimal first component") {
  const auto& pairs = extraspecial_pairs();
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0] == RootPair{kSimpleA, kSimpleB});
  CHECK(pairs[1] == RootPair{kSimpleA, Root{1, 1}});
  CHECK(pairs[2] == RootPair{kSimpleA, Root{2, 1}});
  CHECK(pairs[3] == RootPair{kSimpleB, Root{3, 1}});

  // One pair per non-simple positive root, ordered by that sum, and the first
  // component is the canonically least positive root that can open the pair.
  std::set<int> sums_seen;
  for (const RootPair& p : pairs) {
    Root total = p.r + p.s;
    REQUIRE(is_root(total));
    CHECK(height(total) >= 2);
    CHECK(root_less(p.r, p.s));
    sums_seen.insert(canonical_index(total));
    for (const Root& x : all_roots()) {
      if (height(x) <= 0 || !root_less(x, p.r)) continue;
      CHECK(!is_root(total - x));  // nothing smaller splits the same sum
    }
  }
  CHECK(sums_seen == std::set<int>{8, 9, 10, 11});
}

TEST_CASE("parse_root rejects malformed input") {
  for (const char* bad : {"", "c", "2a", "4a+2b", "a+2b", "3a-2b", "a+b+b", " a", "a ", "+a",
                          "3a+2b ", "-0a-b", "a-b"}) {
    CHECK_THROWS_AS(parse_root(bad), std::invalid_argument);
  }
}

TEST_CASE("to_string rejects non-roots") {
  CHECK_THROWS_AS(to_string(Root{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_index(Root{5, 5}), std::invalid_argument);
}

}  // TEST_SUITE
