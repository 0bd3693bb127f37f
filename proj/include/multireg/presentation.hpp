#pragma once

#include <vector>

#include "multireg/module.hpp"

namespace multireg {

/// M = coker(relations : F1 -> F0).
struct Presentation {
  RingSpec ring;
  FreeModuleSpec F0;
  MatrixOverS relations;

  Presentation(RingSpec ring, MatrixOverS relations);

  /// The free module F with no relations.
  static Presentation free(const RingSpec& ring, FreeModuleSpec F);
  /// S/I for I generated by gens (zero generators are dropped).
  static Presentation quotient(const RingSpec& ring, const std::vector<Poly>& gens);

  std::size_t num_generators() const { return F0.rank(); }
};

/// dim_k M_d, as dim (F0)_d minus the rank of the degree-d image of the relations.
std::size_t hilbert_function(const Presentation& M, const MultiDegree& d);

/// Rank of the degree-d component of the map A : source -> target.
std::size_t map_rank(const MatrixOverS& A, const MultiDegree& d, const RingSpec& ring);

/// Coordinates of the monomial basis of the degree-d part of F: (component,
/// monomial) pairs in a fixed order, with a lookup table.
class DegreeBasis {
public:
  DegreeBasis(const RingSpec& ring, const FreeModuleSpec& F, const MultiDegree& d);
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::pair<std::uint32_t, Monomial>>& terms() const { return terms_; }
  /// Index of m*e_comp, or -1 when it is not in this degree.
  long index(std::uint32_t comp, const Monomial& m) const;

private:
  std::vector<std::pair<std::uint32_t, Monomial>> terms_;
  std::vector<std::size_t> comp_start_;
  std::vector<std::vector<Monomial>> per_comp_;
};

} // namespace multireg
