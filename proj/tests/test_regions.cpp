#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "multireg/regions.hpp"
#include "multireg/resolution.hpp"

using namespace multireg;
using namespace testing_support;

namespace {

using Gens = std::vector<MultiDegree>;

// Minimal elements of {b in box : pred(b)}, by enumeration.
template <class Pred>
Gens brute_minimal(const DegreeBox& box, Pred pred) {
  Gens in;
  for (const auto& p : box.points())
    if (pred(p)) in.push_back(p);
  Gens out;
  for (const auto& p : in) {
    bool minimal = true;
    for (const auto& q : in)
      if (!(q == p) && q.leq(p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiDegree random_point(std::mt19937& g, std::size_t r, int lo, int hi) {
  MultiDegree d(r);
  for (std::size_t j = 0; j < r; ++j) d[j] = lo + int(g() % unsigned(hi - lo + 1));
  return d;
}

} // namespace

TEST_CASE("L and Q regions around (1,2)") {
  const MultiDegree d{1, 2};
  CHECK(region_L(0, d).generators() == Gens{{1, 2}});
  CHECK(region_L(1, d).generators() == Gens{{0, 2}, {1, 1}});
  CHECK(region_L(2, d).generators() == Gens{{-1, 2}, {0, 1}, {1, 0}});
  CHECK(region_Q(0, d).generators() == Gens{{1, 2}});
  CHECK(region_Q(1, d).generators() == Gens{{0, 1}});
  CHECK(region_Q(2, d).generators() == Gens{{-1, 1}, {0, 0}});

  // i = 3 against an enumeration of the membership criterion.
  const DegreeBox box{{-6, -6}, {4, 4}};
  CHECK(region_L(3, d).generators() == brute_minimal(box, [&](const MultiDegree& b) {
          return (d - b).positive_part_sum() <= 3;
        }));
  CHECK(region_Q(3, d).generators() == brute_minimal(box, [&](const MultiDegree& b) {
          return (d - MultiDegree{1, 1} - b).positive_part_sum() <= 2;
        }));
}

TEST_CASE("region set operations") {
  const MultiDegree d{1, 2};
  CHECK(region_intersect(region_L(0, d), region_Q(0, d)).generators() == Gens{{1, 2}});
  CHECK(region_intersect(Region(2, {{0, 2}}), Region(2, {{1, 1}})).generators() == Gens{{1, 2}});
  Region u = region_union(Region(2, {{0, 2}}), Region(2, {{1, 1}}));
  CHECK(u.generators() == Gens{{0, 2}, {1, 1}});
  CHECK(region_equals(u, region_Q(2, {2, 3})));
  CHECK(region_contains(u, {5, 1}));
  CHECK_FALSE(region_contains(u, {0, 1}));
  CHECK(Region(2, {{0, 0}, {1, 1}, {0, 3}}).generators() == Gens{{0, 0}});
  CHECK(Region(2).empty());
  CHECK(region_intersect(Region(2), region_L(1, d)).empty());
  CHECK_THROWS_AS(region_intersect(Region(2), Region(3)), std::invalid_argument);
  CHECK_THROWS_AS(region_L(-1, d), std::invalid_argument);
}

TEST_CASE("region identities on random degrees") {
  std::mt19937 g(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + g() % 3;
    const MultiDegree d = random_point(g, r, -3, 3);
    for (int i = 0; i <= 5; ++i) {
      const Region L = region_L(i, d), Q = region_Q(i, d);
      CHECK(region_subset(L, Q));
      CHECK(region_subset(L, region_L(i + 1, d)));
      if (i >= 1) CHECK(region_subset(Q, region_Q(i + 1, d)));
      if (r == 2) {
        CHECK(L.generators().size() == std::size_t(i + 1));
        if (i >= 1) CHECK(Q.generators().size() == std::size_t(i));
      }
      // Generator membership agrees with the positive-part criterion.
      DegreeBox box{d - MultiDegree(r, i + 2), d + MultiDegree(r, 2)};
      for (const auto& b : box.points()) {
        CHECK(L.contains(b) == in_L(i, d, b));
        CHECK(Q.contains(b) == in_Q(i, d, b));
        CHECK(in_L(i, d, b) == ((d - b).positive_part_sum() <= i));
      }
    }
  }
}

TEST_CASE("Q regions shrink when the degree grows by a strictly positive amount") {
  std::mt19937 g(12);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + g() % 3;
    const MultiDegree b = random_point(g, r, 1, 3), c = random_point(g, r, 1, 3);
    for (int i = 1; i <= 4; ++i) CHECK(region_subset(region_Q(i + 1, b + c), region_Q(i, b)));
  }
}

TEST_CASE("Betti bounds") {
  BettiTable S(2);
  S.add(0, {0, 0});
  CHECK(betti_bound_L(S).generators() == Gens{{0, 0}});
  CHECK(betti_bound_Q(S).generators() == Gens{{0, 0}});
  CHECK_THROWS_AS(betti_bound_L(BettiTable(2)), std::invalid_argument);

  // Bounds are intersections of the single-entry regions.
  BettiTable B(2);
  B.add(0, {0, 0});
  B.add(1, {0, 8});
  B.add(1, {3, 1});
  const Region expect = region_intersect(region_intersect(region_L(0, {0, 0}), region_L(1, {0, 8})), region_L(1, {3, 1}));
  CHECK(betti_bound_L(B) == expect);
  CHECK(betti_bound_L(B).generators() == Gens{{2, 7}});
}
