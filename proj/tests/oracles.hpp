#pragma once

// Test-only oracles that avoid Gröbner bases and Schreyer frames.

#include <algorithm>
#include <vector>

#include "multireg/linalg.hpp"
#include "multireg/presentation.hpp"

namespace oracle {

using namespace multireg;

/// dim Tor_i(M, k)_b as the homology of the Koszul complex K(x) ⊗ M in degree
/// b, with M_e = (F0)_e / (image of relations)_e handled by stacking relation
/// images under each map.
inline std::size_t koszul_betti(const Presentation& M, int i, const MultiDegree& b) {
  const RingSpec& R = M.ring;
  const int nv = R.num_vars();
  if (i < 0 || i > nv) return 0;
  auto subsets = [&](int size) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << nv); ++mask)
      if (__builtin_popcount(unsigned(mask)) == size) {
        std::vector<int> s;
        for (int v = 0; v < nv; ++v)
          if (mask >> v & 1) s.push_back(v);
        out.push_back(s);
      }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sdeg = [&](const std::vector<int>& s) {
    MultiDegree d = MultiDegree::zero(R.r());
    for (int v : s) d[R.factor_of(v)] += 1;
    return d;
  };
  // Coordinates of ⊕_{S} (F0)_{b - deg S}.
  struct Space {
    std::vector<std::vector<int>> sets;
    std::vector<DegreeBasis> bases;
    std::vector<std::size_t> offset;
    std::size_t dim = 0;
  };
  auto space = [&](int size) {
    Space sp;
    if (size < 0 || size > nv) return sp;
    sp.sets = subsets(size);
    for (const auto& s : sp.sets) {
      sp.offset.push_back(sp.dim);
      sp.bases.emplace_back(R, M.F0, b - sdeg(s));
      sp.dim += sp.bases.back().size();
    }
    return sp;
  };
  // Rows spanning the relation images in a space.
  auto relation_rows = [&](const Space& sp) {
    std::vector<SparseRow> rows;
    for (std::size_t si = 0; si < sp.sets.size(); ++si) {
      MultiDegree e = b - sdeg(sp.sets[si]);
      for (std::size_t l = 0; l < M.relations.cols(); ++l)
        for (const auto& mu : monomials_of_degree(R, e - M.relations.source().twists[l])) {
          SparseRow row;
          for (const auto& t : M.relations.column(l))
            row.push_back({std::uint32_t(sp.offset[si] + sp.bases[si].index(t.comp, t.m * mu)), t.c});
          std::sort(row.begin(), row.end());
          if (!row.empty()) rows.push_back(row);
        }
    }
    return rows;
  };
  const auto& k = R.field();
  // Rank of the induced map K_j -> K_{j-1} on quotients.
  auto map_rank_q = [&](int j) -> std::size_t {
    if (j < 1 || j > nv) return 0;
    Space src = space(j), tgt = space(j - 1);
    std::vector<SparseRow> rel = relation_rows(tgt);
    std::size_t base = sparse_rank(rel, tgt.dim, k);
    std::vector<SparseRow> rows = rel;
    for (std::size_t si = 0; si < src.sets.size(); ++si) {
      const auto& s = src.sets[si];
      for (const auto& [comp, m] : src.bases[si].terms()) {
        SparseRow row;
        for (std::size_t p = 0; p < s.size(); ++p) {
          std::vector<int> rest = s;
          rest.erase(rest.begin() + long(p));
          std::size_t ti = std::size_t(std::lower_bound(tgt.sets.begin(), tgt.sets.end(), rest) - tgt.sets.begin());
          Monomial xm = m * Monomial::var(s[p]);
          long idx = tgt.bases[ti].index(comp, xm);
          row.push_back({std::uint32_t(tgt.offset[ti] + std::size_t(idx)), p % 2 ? k.neg(1) : 1});
        }
        std::sort(row.begin(), row.end());
        rows.push_back(row);
      }
    }
    return sparse_rank(rows, tgt.dim, k) - base;
  };
  Space here = space(i);
  std::size_t dim = here.dim - sparse_rank(relation_rows(here), here.dim, k);
  return dim - map_rank_q(i) - map_rank_q(i + 1);
}

} // namespace oracle
