#pragma once

#include <optional>
#include <random>
#include <vector>

#include "multireg/groebner.hpp"
#include "multireg/presentation.hpp"

namespace testing_support {

using namespace multireg;

inline Poly random_monomial(const RingSpec& R, const MultiDegree& d, std::mt19937& g) {
  auto ms = monomials_of_degree(R, d);
  return Poly::monomial(ms[g() % ms.size()], 1);
}

/// Monomial or binomial of degree d.
inline Poly random_binomial(const RingSpec& R, const MultiDegree& d, std::mt19937& g) {
  Poly f = random_monomial(R, d, g);
  if (g() % 2) f = sub(f, scale(random_monomial(R, d, g), 1 + g() % 5, R.field()), R.field());
  return f;
}

inline MultiDegree random_degree(std::size_t r, int hi, std::mt19937& g) {
  MultiDegree d(r);
  for (std::size_t j = 0; j < r; ++j) d[j] = int(g() % (hi + 1));
  if (d.total() == 0) d[g() % r] = 1;
  return d;
}

/// S/I with I the B-saturation of a few random monomials/binomials; nullopt
/// when the saturation is the unit ideal.
inline std::optional<Presentation> random_saturated_quotient(const RingSpec& R, std::mt19937& g) {
  std::vector<Poly> gens;
  const int ng = 1 + int(g() % 3);
  for (int k = 0; k < ng; ++k) {
    Poly f = random_binomial(R, random_degree(R.r(), 2, g), g);
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) return std::nullopt;
  auto I = ideal_generators(saturate(ideal_matrix(gens, R), irrelevant_ideal(R), R));
  for (const auto& f : I)
    if (f.is_constant()) return std::nullopt;
  return Presentation::quotient(R, I);
}

/// Cokernel of a random monomial/binomial matrix with two generators, with the
/// relations replaced by their B-saturation.
inline std::optional<Presentation> random_saturated_module(const RingSpec& R, std::mt19937& g) {
  const std::size_t r = R.r();
  FreeModuleSpec F0;
  for (int k = 0; k < 2; ++k) F0.twists.push_back(g() % 2 ? MultiDegree(r) : MultiDegree::unit(r, g() % r));
  FreeModuleSpec F1;
  std::vector<Vec> cols;
  const int nrel = 1 + int(g() % 3);
  for (int l = 0; l < nrel; ++l) {
    // Column degree at least every generator degree.
    MultiDegree c = max(F0.twists[0], F0.twists[1]) + random_degree(r, 1, g);
    Vec v;
    for (std::uint32_t k = 0; k < 2; ++k) {
      if (g() % 3 == 0) continue;
      Poly f = random_binomial(R, c - F0.twists[k], g);
      for (const auto& t : f.terms()) v.push_back({t.m, k, t.c});
    }
    if (v.empty()) continue;
    cols.push_back(vec_from_terms(std::move(v), ModuleOrder::plain(2), R.field()));
    F1.twists.push_back(c);
  }
  if (cols.empty()) return std::nullopt;
  MatrixOverS N(F1, F0, std::move(cols), R);
  return Presentation(R, saturate(N, irrelevant_ideal(R), R));
}

} // namespace testing_support
