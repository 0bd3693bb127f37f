#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "multireg/resolution.hpp"
#include "oracles.hpp"

using namespace multireg;
using namespace testing_support;

namespace {

using Table = std::map<std::pair<int, MultiDegree>, std::size_t>;

Presentation not_linear_module() {
  return parse_input(
             "ring p=32003 n=[1,1]\n"
             "module rows=[(0,1),(0,1),(1,0),(1,0)]\n"
             "matrix [[x0,x1,0,0],[0,0,x1,x0],[-y0,0,-y0,0],[0,-y1,0,-y1]]")
      .module;
}

// Exactness and Euler characteristic in every degree of a box.
void check_resolution(const FreeComplex& C, const Presentation& M, const DegreeBox& box) {
  for (std::size_t i = 0; i + 1 < C.differentials.size(); ++i)
    CHECK(C.differentials[i].compose(C.differentials[i + 1], C.ring).is_zero());
  for (const auto& d : box.points()) {
    for (std::size_t i = 1; i < C.terms.size(); ++i) CHECK(homology_dim(C, int(i), d) == 0);
    long euler = 0;
    for (std::size_t i = 0; i < C.terms.size(); ++i) {
      long dim = 0;
      for (const auto& t : C.terms[i].twists) dim += long(count_monomials(C.ring, d - t));
      euler += (i % 2 ? -1 : 1) * dim;
    }
    CHECK(euler == long(hilbert_function(M, d)));
  }
}

} // namespace

TEST_CASE("resolution of S and trivial complexes") {
  RingSpec R({1, 2});
  auto S = Presentation::free(R, {{D({0, 0})}});
  FreeComplex C = free_resolution(S);
  CHECK(C.terms.size() == 1);
  CHECK(C.differentials.empty());

  FreeModuleSpec F{{D({0, 0})}};
  FreeComplex T{R, {F, F}, {MatrixOverS::identity(F, R)}};
  CHECK_FALSE(is_minimal_complex(T));
  FreeComplex Tm = minimalize(T);
  CHECK(Tm.terms.size() == 1);
  CHECK(Tm.terms[0].rank() == 0);
}

TEST_CASE("Koszul complex and minimalization") {
  RingSpec R({1, 1});
  FreeComplex K = koszul_complex(R, Ps(R, {"x0", "x1"}));
  CHECK(is_minimal_complex(K));
  BettiTable bk = betti(K);
  CHECK(bk.entries() == Table{{{0, D({0, 0})}, 1}, {{1, D({1, 0})}, 2}, {{2, D({2, 0})}, 1}});
  FreeComplex Km = minimalize(K);
  CHECK(betti(Km) == bk);

  auto M = Presentation::quotient(R, Ps(R, {"x0", "x1"}));
  FreeComplex F = free_resolution(M);
  CHECK(is_minimal_complex(F));
  CHECK(betti(F) == bk);
  // A redundant generator gives a non-minimal frame with the same minimal part.
  auto M2 = Presentation::quotient(R, Ps(R, {"x0", "x1", "x0 + x1"}));
  CHECK(betti(free_resolution(M2)) == bk);
}

TEST_CASE("S/B on P1xP2") {
  RingSpec R({1, 2});
  auto M = Presentation::quotient(R, irrelevant_ideal(R));
  FreeComplex frame = schreyer_resolution(M);
  FreeComplex C = minimalize(frame);
  CHECK(is_minimal_complex(C));
  CHECK(is_minimal_complex(frame) == (betti(frame).entries() == betti(C).entries()));
  Table expect{{{0, D({0, 0})}, 1}, {{1, D({1, 1})}, 6}, {{2, D({1, 2})}, 6}, {{2, D({2, 1})}, 3},
               {{3, D({1, 3})}, 2}, {{3, D({2, 2})}, 3}, {{4, D({2, 3})}, 1}};
  CHECK(betti(C).entries() == expect);
  CHECK(betti_numbers(M).entries() == expect);
  check_resolution(C, M, {D({0, 0}), D({3, 3})});
}

TEST_CASE("Example module: truncation-free resolution facts") {
  Presentation M = not_linear_module();
  FreeComplex C = free_resolution(M);
  Table expect{{{0, D({0, 1})}, 2}, {{0, D({1, 0})}, 2}, {{1, D({1, 1})}, 4}};
  CHECK(betti(C).entries() == expect);
  check_resolution(C, M, {D({0, 0}), D({3, 3})});
}

TEST_CASE("Betti numbers agree with the Koszul homology oracle on random modules") {
  std::mt19937 rng(11);
  for (std::vector<int> n : {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
    RingSpec R(n);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Poly> gens;
      for (int g = 0; g < 3; ++g) {
        MultiDegree d{int(rng() % 3), int(rng() % 3)};
        if (d.total() == 0) d[0] = 1;
        auto ms = monomials_of_degree(R, d);
        std::vector<Term> ts{{ms[rng() % ms.size()], 1}};
        if (rng() % 2) ts.push_back({ms[rng() % ms.size()], Coeff(1 + rng() % 7)});
        gens.push_back(Poly::from_terms(ts, R.field()));
      }
      auto M = Presentation::quotient(R, gens);
      FreeComplex C = free_resolution(M);
      BettiTable fast = betti_numbers(M);
      BettiTable slow = betti(C);
      CHECK(fast == slow);
      check_resolution(C, M, {D({0, 0}), D({3, 3})});
      CHECK(int(C.length()) <= R.num_vars());
      for (const auto& [key, v] : slow.entries()) CHECK(oracle::koszul_betti(M, key.first, key.second) == v);
      // No Betti numbers outside the computed table in a small box.
      for (int i = 0; i <= R.num_vars(); ++i)
        for (const auto& b : DegreeBox{D({0, 0}), D({4, 4})}.points())
          if (slow.at(i, b) == 0) CHECK(oracle::koszul_betti(M, i, b) == 0);
      // Permuted generators give the same table.
      std::vector<Poly> rev(gens.rbegin(), gens.rend());
      CHECK(betti(free_resolution(Presentation::quotient(R, rev))) == slow);
    }
  }
}
