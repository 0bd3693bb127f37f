#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "multireg/linalg.hpp"

using namespace multireg;
using namespace testing_support;

namespace {

GroebnerBasis ideal_gb(const RingSpec& R, const std::vector<std::string>& gens) {
  return submodule_gb(ideal_matrix(Ps(R, gens), R), R);
}

std::vector<Poly> gb_polys(const GroebnerBasis& G) {
  std::vector<Poly> out;
  for (const auto& g : G.elements()) out.push_back(as_poly(g));
  return out;
}

bool contains_poly(const std::vector<Poly>& fs, const Poly& f) {
  for (const auto& g : fs)
    if (g == f) return true;
  return false;
}

// Rank of the degree-d part of the column span of N inside its target.
std::size_t span_dim(const MatrixOverS& N, const MultiDegree& d, const RingSpec& R) {
  DegreeBasis basis(R, N.target(), d);
  std::vector<SparseRow> rows;
  for (std::size_t l = 0; l < N.cols(); ++l)
    for (const auto& mu : monomials_of_degree(R, d - N.source().twists[l])) {
      SparseRow row;
      for (const auto& t : N.column(l)) row.push_back({std::uint32_t(basis.index(t.comp, t.m * mu)), t.c});
      std::sort(row.begin(), row.end());
      if (!row.empty()) rows.push_back(row);
    }
  return sparse_rank(rows, basis.size(), R.field());
}

// Random homogeneous polynomial of degree d with up to `terms` terms.
Poly random_poly(const RingSpec& R, const MultiDegree& d, int terms, std::mt19937& rng) {
  auto ms = monomials_of_degree(R, d);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) ts.push_back({ms[rng() % ms.size()], Coeff(1 + rng() % 5)});
  return Poly::from_terms(ts, R.field());
}

} // namespace

TEST_CASE("buchberger small cases") {
  RingSpec R({1, 1});
  auto g1 = gb_polys(ideal_gb(R, {"x0*y1 - x1*y0"}));
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == P(R, "x1*y0 - x0*y1"));  // monic multiple of the input

  auto g2 = gb_polys(ideal_gb(R, {"x0", "x1"}));
  REQUIRE(g2.size() == 2);
  CHECK(contains_poly(g2, P(R, "x0")));
  CHECK(contains_poly(g2, P(R, "x1")));

  // spair(x0^2 + x1^2, x0*x1) = x1*(x0^2+x1^2) - x0*(x0*x1) = x1^3.
  auto g3 = gb_polys(ideal_gb(R, {"x0^2 + x1^2", "x0*x1"}));
  CHECK(contains_poly(g3, P(R, "x1^3")));
}

TEST_CASE("inhomogeneous input is rejected") {
  RingSpec R({1, 1});
  Vec v = as_vec(P(R, "x0*y0 + x1"));
  CHECK_THROWS_AS(buchberger({v}, FreeModuleSpec{{D({0, 0})}}, ModuleOrder::plain(1), R),
                  std::invalid_argument);
}

TEST_CASE("normal forms") {
  RingSpec R({1, 1});
  auto G = ideal_gb(R, {"x0*y0"});
  CHECK(normal_form(as_vec(P(R, "x0^2*y0")), G, R).empty());
  auto H = ideal_gb(R, {"x0*y1 - x1*y0"});
  // grevlex with x0 > x1 > y0 > y1 makes x1*y0 the lead term.
  CHECK(as_poly(normal_form(as_vec(P(R, "x1*y0")), H, R)) == P(R, "x0*y1"));
  CHECK(as_poly(normal_form(as_vec(P(R, "x0*y1")), H, R)) == P(R, "x0*y1"));
  for (const auto& g : H.elements()) CHECK(normal_form(g, H, R).empty());
}

TEST_CASE("syzygies small cases") {
  RingSpec R({1, 1});
  MatrixOverS M = ideal_matrix(Ps(R, {"x0", "x1"}), R);
  MatrixOverS Z = syzygies(M, R);
  REQUIRE(Z.cols() == 1);
  CHECK(Z.source().twists[0] == D({2, 0}));
  CHECK(Z.entry(0, 0) == P(R, "-x1"));
  CHECK(Z.entry(1, 0) == P(R, "x0"));

  FreeModuleSpec F{{D({0, 0}), D({1, 0})}};
  CHECK(syzygies(MatrixOverS::identity(F, R), R).cols() == 0);
}

TEST_CASE("colon and intersection") {
  RingSpec R({1, 1});
  auto Iq = [&](std::vector<std::string> g) { return ideal_matrix(Ps(R, g), R); };
  CHECK(same_submodule(colon(Iq({"x0*y0"}), P(R, "y0"), R), Iq({"x0"}), R));
  CHECK(same_submodule(colon(Iq({"x0*y0", "x1*y1^2"}), P(R, "1"), R), Iq({"x0*y0", "x1*y1^2"}), R));
  CHECK(same_submodule(colon(Iq({"x0^2", "x0*x1"}), P(R, "x1"), R), Iq({"x0"}), R));
  CHECK_THROWS(colon(Iq({"x0"}), Poly(), R));

  CHECK(same_submodule(intersect_submodules(Iq({"x0"}), Iq({"x1"}), R), Iq({"x0*x1"}), R));
  auto N = Iq({"x0*y1 - x1*y0", "x0^2"});
  CHECK(same_submodule(intersect_submodules(N, N, R), N, R));
}

TEST_CASE("saturation by the irrelevant ideal") {
  RingSpec R({1, 1});
  auto B = irrelevant_ideal(R);
  CHECK(B.size() == 4);
  MatrixOverS Bm = ideal_matrix(B, R);
  CHECK(same_submodule(saturate(Bm, B, R), ideal_matrix({P(R, "1")}, R), R));
  std::vector<Poly> x0B;
  for (const auto& g : B) x0B.push_back(mul(P(R, "x0"), g, R.field()));
  MatrixOverS sat = saturate(ideal_matrix(x0B, R), B, R);
  CHECK(same_submodule(sat, ideal_matrix({P(R, "x0")}, R), R));
  CHECK(same_submodule(colon_ideal(sat, B, R), sat, R));
}

TEST_CASE("random ideals: Buchberger criterion, idempotence, syzygy soundness and completeness") {
  std::mt19937 rng(2024);
  for (std::vector<int> n : {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
    RingSpec R(n);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Poly> gens;
      int ng = 2 + int(rng() % 2);
      for (int g = 0; g < ng; ++g) {
        MultiDegree d{int(1 + rng() % 2), int(rng() % 3)};
        gens.push_back(random_poly(R, d, 1 + int(rng() % 3), rng));
      }
      MatrixOverS I = ideal_matrix(gens, R);
      GroebnerBasis G = submodule_gb(I, R);
      CHECK(satisfies_buchberger_criterion(G, R));
      for (const auto& f : gens) CHECK(normal_form(as_vec(f), G, R).empty());
      Poly h = random_poly(R, D({2, 2}), 4, rng);
      Vec nf = normal_form(as_vec(h), G, R);
      CHECK(vec_equal(normal_form(nf, G, R), nf));

      MatrixOverS Z = syzygies(I, R);
      CHECK(I.compose(Z, R).is_zero());
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          MultiDegree d{a, b};
          std::size_t src_dim = 0;
          for (const auto& t : I.source().twists) src_dim += count_monomials(R, d - t);
          std::size_t ker = src_dim - span_dim(I, d, R);
          CHECK(ker == span_dim(Z, d, R));
        }
    }
  }
}

TEST_CASE("module syzygies and Gebauer-Moeller agree with plain Buchberger") {
  std::mt19937 rng(99);
  RingSpec R({1, 1});
  for (int trial = 0; trial < 10; ++trial) {
    FreeModuleSpec F{{D({0, 0}), D({1, 0})}};
    std::vector<Vec> gens;
    for (int g = 0; g < 3; ++g) {
      MultiDegree d{int(1 + rng() % 2), int(1 + rng() % 2)};
      Vec v;
      for (std::uint32_t c = 0; c < 2; ++c) {
        if ((d - F.twists[c]).is_nonnegative()) {
          Poly f = random_poly(R, d - F.twists[c], 2, rng);
          for (const auto& t : f.terms()) v.push_back({t.m, c, t.c});
        }
      }
      gens.push_back(vec_from_terms(v, ModuleOrder::plain(2), R.field()));
    }
    GroebnerOptions plain;
    plain.gebauer_moller = false;
    auto A = buchberger(gens, F, ModuleOrder::plain(2), R);
    auto B = buchberger(gens, F, ModuleOrder::plain(2), R, plain);
    REQUIRE(A.size() == B.size());
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(vec_equal(A.elements()[i], B.elements()[i]));
    CHECK(satisfies_buchberger_criterion(A, R));

    FreeModuleSpec src;
    for (const auto& g : gens) src.twists.push_back(vec_degree(g, F, R));
    MatrixOverS M(src, F, gens, R);
    MatrixOverS Z = syzygies(M, R);
    CHECK(M.compose(Z, R).is_zero());
  }
}
