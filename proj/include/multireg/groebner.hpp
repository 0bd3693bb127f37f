#pragma once

#include <vector>

#include "multireg/module.hpp"

namespace multireg {

struct GroebnerOptions {
  /// Gebauer-Moeller pair elimination.
  bool gebauer_moller = true;
  /// Skip S-pairs between elements whose leads both lie in a block >= 1
  /// (used for syzygy computations by elimination).
  bool skip_upper_block_pairs = false;
  /// Interreduce the result.
  bool reduce = true;
};

/// Gröbner basis of a submodule of a graded free module.
class GroebnerBasis {
public:
  GroebnerBasis(FreeModuleSpec ambient, ModuleOrder order, std::vector<Vec> elements, bool reduced);

  const FreeModuleSpec& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Vec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }

  /// Index of an element whose lead term divides m*e_comp, or -1.
  long find_divisor(const Monomial& m, std::uint32_t comp) const;

  /// True iff the term m*e_comp is not divisible by any lead term.
  bool is_standard(const Monomial& m, std::uint32_t comp) const { return find_divisor(m, comp) < 0; }

private:
  struct LeadEntry {
    Monomial m;
    std::uint32_t index;
  };
  FreeModuleSpec ambient_;
  ModuleOrder order_;
  std::vector<Vec> elements_;
  bool reduced_;
  std::vector<std::vector<LeadEntry>> by_comp_;
};

/// Homogeneous Buchberger algorithm with the normal selection strategy.
/// Throws std::invalid_argument on inhomogeneous input.
GroebnerBasis buchberger(const std::vector<Vec>& gens, const FreeModuleSpec& F,
                         const ModuleOrder& order, const RingSpec& ring,
                         const GroebnerOptions& opts = {});

/// Fully reduced remainder of f (terms ordered by G's order).
Vec normal_form(const Vec& f, const GroebnerBasis& G, const RingSpec& ring);

/// Every S-pair of G reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G, const RingSpec& ring);

/// Reduced GB of the column span of N in the plain order of its target.
GroebnerBasis submodule_gb(const MatrixOverS& N, const RingSpec& ring);
/// Column-span equality via reduced Gröbner bases.
bool same_submodule(const MatrixOverS& a, const MatrixOverS& b, const RingSpec& ring);
/// Column span of a is contained in that of b.
bool submodule_contains(const MatrixOverS& b, const MatrixOverS& a, const RingSpec& ring);
/// Matrix whose columns are the elements of G.
MatrixOverS gb_matrix(const GroebnerBasis& G, const RingSpec& ring);

/// Generators of ker(M), as columns of a matrix into M.source().
MatrixOverS syzygies(const MatrixOverS& M, const RingSpec& ring);

/// Generators of {v in F : f v in N}, where N is given by the columns of a matrix into F.
MatrixOverS colon(const MatrixOverS& N, const Poly& f, const RingSpec& ring);
/// (N :_F J) = intersection over generators g of J of (N : g).
MatrixOverS colon_ideal(const MatrixOverS& N, const std::vector<Poly>& J, const RingSpec& ring);
/// (N :_F J^infinity).
MatrixOverS saturate(const MatrixOverS& N, const std::vector<Poly>& J, const RingSpec& ring);
MatrixOverS intersect_submodules(const MatrixOverS& N1, const MatrixOverS& N2,
                                 const RingSpec& ring);

/// Generators prod_i x_{i,j_i} of the irrelevant ideal B.
std::vector<Poly> irrelevant_ideal(const RingSpec& ring);
/// Generators of B^t.
std::vector<Poly> irrelevant_ideal_power(const RingSpec& ring, int t);

/// Ideal <gens> of S as a 1-row matrix.
MatrixOverS ideal_matrix(const std::vector<Poly>& gens, const RingSpec& ring);
std::vector<Poly> ideal_generators(const MatrixOverS& N);

} // namespace multireg
