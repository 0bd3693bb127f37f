#include "doctest.h"
#include "helpers.hpp"

using namespace multireg;
using namespace testing_support;

TEST_CASE("monomials of a multidegree") {
  RingSpec R({1, 2});
  CHECK(monomials_of_degree(R, D({0, 0})).size() == 1);
  CHECK(monomials_of_degree(R, D({0, 0}))[0].is_one());
  CHECK(monomials_of_degree(R, D({1, 1})).size() == 6);
  CHECK(monomials_of_degree(R, D({-1, 2})).empty());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      auto ms = monomials_of_degree(R, D({a, b}));
      CHECK(ms.size() == binomial(1 + a, 1) * binomial(2 + b, 2));
      CHECK(ms.size() == count_monomials(R, D({a, b})));
      for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(grevlex_cmp(ms[i], ms[i + 1]) > 0);
      for (const auto& m : ms) CHECK(R.degree(m) == D({a, b}));
    }
}

TEST_CASE("ring validation") {
  CHECK_THROWS(RingSpec({0, 1}));
  CHECK_THROWS(RingSpec({1, 1}, 12));
  CHECK_THROWS(RingSpec({}));
  CHECK_THROWS(RingSpec({7, 8}));
  RingSpec R({1, 2, 3});
  CHECK(R.num_vars() == 2 + 3 + 4);
}

TEST_CASE("polynomial arithmetic") {
  RingSpec R({1, 2});
  const auto& k = R.field();
  CHECK(mul(P(R, "x0"), Poly(), k).is_zero());
  CHECK(mul(P(R, "x0 + x1"), P(R, "x0 - x1"), k) == P(R, "x0^2 - x1^2"));
  CHECK(mul(P(R, "x0^2*y0"), P(R, "x1*y2^2"), k).degree(R) == D({3, 3}));
  CHECK(sub(P(R, "x0*y1"), P(R, "x0*y1"), k).is_zero());
  CHECK(scale(P(R, "2*x0 + y0"), k.inv(2), k) == P(R, "x0 + 16002*y0"));
  CHECK(P(R, "x0*y0 + x1^2").is_homogeneous(R) == false);
  CHECK(P(R, "-x0").lead().c == 32002);
  CHECK(to_string(P(R, "x1 - 3*x0^2*y2 + 1 - 1"), R) == "-3*x0^2*y2 + x1");
}

TEST_CASE("degree additivity on random products") {
  RingSpec R({1, 2});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MultiDegree a{int(rng() % 3), int(rng() % 3)}, b{int(rng() % 3), int(rng() % 3)};
    auto ma = monomials_of_degree(R, a), mb = monomials_of_degree(R, b);
    std::vector<Term> ta, tb;
    for (int i = 0; i < 3; ++i) {
      ta.push_back({ma[rng() % ma.size()], Coeff(1 + rng() % 100)});
      tb.push_back({mb[rng() % mb.size()], Coeff(1 + rng() % 100)});
    }
    Poly f = Poly::from_terms(ta, R.field()), g = Poly::from_terms(tb, R.field());
    Poly h = mul(f, g, R.field());
    REQUIRE(!h.is_zero());
    CHECK(h.is_homogeneous(R));
    CHECK(h.degree(R) == a + b);
  }
}

TEST_CASE("matrix homogeneity is enforced") {
  RingSpec R({1, 1});
  FreeModuleSpec tgt{{D({0, 0})}}, src{{D({1, 0})}}, bad{{D({0, 1})}};
  std::vector<std::vector<Poly>> e{{P(R, "x0")}};
  CHECK_NOTHROW(MatrixOverS::from_entries(src, tgt, e, R));
  CHECK_THROWS(MatrixOverS::from_entries(bad, tgt, e, R));
}

TEST_CASE("hilbert function") {
  RingSpec R({1, 2});
  Presentation S = Presentation::free(R, {{D({0, 0})}});
  CHECK(hilbert_function(S, D({1, 1})) == 6);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(hilbert_function(S, D({a, b})) == count_monomials(R, D({a, b})));
  Presentation SB = Presentation::quotient(R, irrelevant_ideal(R));
  CHECK(hilbert_function(SB, D({1, 1})) == 0);
  CHECK(hilbert_function(SB, D({0, 0})) == 1);
  CHECK(hilbert_function(SB, D({3, 0})) == 4);

  // Four generators in degrees (0,1),(0,1),(1,0),(1,0) with relations of degree
  // (1,1): in degree (1,0) only the two (1,0) generators contribute.
  RingSpec R11({1, 1});
  ModuleInput in = parse_input(
      "ring p=32003 n=[1,1]\n"
      "module rows=[(0,1),(0,1),(1,0),(1,0)] matrix [[x0,x1,0,0],[0,0,x1,x0],[-y0,0,-y0,0],[0,-y1,0,-y1]]");
  CHECK(hilbert_function(in.module, D({1, 0})) == 2);
  CHECK(hilbert_function(in.module, D({0, 0})) == 0);
}
