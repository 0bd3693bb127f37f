#include "multireg/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "multireg/linalg.hpp"

namespace multireg {

Presentation::Presentation(RingSpec ring_, MatrixOverS relations_)
    : ring(std::move(ring_)), F0(relations_.target()), relations(std::move(relations_)) {}

Presentation Presentation::free(const RingSpec& ring, FreeModuleSpec F) {
  return Presentation(ring, MatrixOverS(FreeModuleSpec{}, std::move(F), {}, ring));
}

Presentation Presentation::quotient(const RingSpec& ring, const std::vector<Poly>& gens) {
  FreeModuleSpec src, tgt{{MultiDegree::zero(ring.r())}};
  std::vector<Vec> cols;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(ring)) throw std::invalid_argument("ideal generator is not homogeneous");
    src.twists.push_back(g.degree(ring));
    Vec v;
    for (const auto& t : g.terms()) v.push_back({t.m, 0, t.c});
    cols.push_back(std::move(v));
  }
  return Presentation(ring, MatrixOverS(src, tgt, cols, ring));
}

DegreeBasis::DegreeBasis(const RingSpec& ring, const FreeModuleSpec& F, const MultiDegree& d) {
  for (std::size_t c = 0; c < F.rank(); ++c) {
    comp_start_.push_back(terms_.size());
    per_comp_.push_back(monomials_of_degree(ring, d - F.twists[c]));
    for (const auto& m : per_comp_.back()) terms_.push_back({std::uint32_t(c), m});
  }
}

long DegreeBasis::index(std::uint32_t comp, const Monomial& m) const {
  const auto& v = per_comp_[comp];
  auto it = std::lower_bound(v.begin(), v.end(), m,
                             [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  if (it == v.end() || *it != m) return -1;
  return long(comp_start_[comp] + std::size_t(it - v.begin()));
}

std::size_t map_rank(const MatrixOverS& A, const MultiDegree& d, const RingSpec& ring) {
  DegreeBasis basis(ring, A.target(), d);
  if (basis.size() == 0) return 0;
  std::vector<SparseRow> rows;
  for (std::size_t l = 0; l < A.cols(); ++l) {
    const Vec& col = A.column(l);
    if (col.empty()) continue;
    for (const auto& mu : monomials_of_degree(ring, d - A.source().twists[l])) {
      SparseRow row;
      row.reserve(col.size());
      for (const auto& t : col) row.push_back({std::uint32_t(basis.index(t.comp, t.m * mu)), t.c});
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
  }
  return sparse_rank(std::move(rows), basis.size(), ring.field());
}

std::size_t hilbert_function(const Presentation& M, const MultiDegree& d) {
  std::size_t dim = 0;
  for (const auto& t : M.F0.twists) dim += count_monomials(M.ring, d - t);
  return dim - map_rank(M.relations, d, M.ring);
}

} // namespace multireg
