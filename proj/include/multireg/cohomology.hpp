#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "multireg/groebner.hpp"
#include "multireg/linalg.hpp"
#include "multireg/presentation.hpp"
#include "multireg/reduce.hpp"

namespace multireg {

struct StabilizationNotReached : std::runtime_error {
  explicit StabilizationNotReached(int cap)
      : std::runtime_error("Ext(S/B^t, M) did not stabilize on the box for t <= " + std::to_string(cap)),
        cap(cap) {}
  int cap;
};

struct BoxTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// h^q(P^n, O(c)) for q = 0..n.
std::vector<std::size_t> line_bundle_cohomology(int n, int c);

/// dim H^i_B(S)_p from the Künneth formula.
std::size_t structure_sheaf_local_cohomology(const RingSpec& ring, int i, const MultiDegree& p);

/// M with a monomial k-basis in each degree (standard monomials of a Gröbner
/// basis of the relations) and multiplication by monomials. Safe for concurrent use.
class GradedModule {
public:
  explicit GradedModule(const Presentation& M);

  const RingSpec& ring() const { return ring_; }
  std::size_t dim(const MultiDegree& e) const { return piece(e).basis.size(); }
  /// Coordinates of mu * (basis element b of M_e) in M_{e + deg mu}.
  SparseRow multiply(const MultiDegree& e, std::size_t b, const Monomial& mu) const;

  struct Piece {
    std::vector<std::pair<std::uint32_t, Monomial>> basis;
    /// Per component: monomial -> basis index.
    std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index;
    /// Per component: normal forms of non-standard monomials, as coordinates.
    mutable std::vector<std::unordered_map<Monomial, SparseRow, MonomialHash>> nf;
  };
  const Piece& piece(const MultiDegree& e) const;

private:
  RingSpec ring_;
  FreeModuleSpec F0_;
  ModuleOrder order_;
  std::unique_ptr<Reducer> reducer_;
  std::vector<Vec> gb_;
  mutable std::mutex mu_;
  mutable std::map<MultiDegree, std::unique_ptr<Piece>> pieces_;
};

/// Ordinary: the product ideal B^t. Frobenius: B^[t], generated by the t-th
/// powers of the generators of B. Both systems are cofinal.
enum class PowerKind { Ordinary, Frobenius };

struct CohomologyOptions {
  /// Unset: derived from the box (see default_t_start).
  std::optional<int> t_start;
  /// Largest t tried is t_start + extra_steps.
  int extra_steps = 6;
  int threads = 0;
  PowerKind powers = PowerKind::Frobenius;
};

/// dim H^i_B(M)_p for i = 0..max_index and p in box.
struct CohomologyTable {
  DegreeBox box;
  int max_index = 0;
  /// Power of B at which two consecutive Ext tables agreed.
  int t = 0;
  bool stabilized = false;
  std::map<std::pair<int, MultiDegree>, std::size_t> dims;

  std::size_t at(int i, const MultiDegree& p) const;
  bool covers(const MultiDegree& p) const { return box.contains(p); }
};

/// Smallest t tried by local_cohomology_box when no t_start is given.
int default_t_start(const RingSpec& ring, const DegreeBox& box);

/// dim Ext^i(S/B^t, M)_p for i = 0..max_index and p in box at a single t.
std::map<std::pair<int, MultiDegree>, std::size_t> ext_box(const GradedModule& M, const DegreeBox& box, int t,
                                                            int max_index, PowerKind kind = PowerKind::Frobenius,
                                                            int threads = 0);

/// Local cohomology on a box as the stabilized value of Ext^i(S/B^t, M).
CohomologyTable local_cohomology_box(const Presentation& M, const DegreeBox& box,
                                     const CohomologyOptions& opts = {});

/// Degrees where the definition of d-regularity asks for vanishing: H^0 on
/// the union of d + e_j + N^r, H^i on L_{i-1}(d) with lambda_j <= n_j + 1.
/// Returns the generating corners (i, corner).
std::vector<std::pair<int, MultiDegree>> regularity_corners(const RingSpec& ring, const MultiDegree& d);

/// Smallest box around d containing every corner, widened by `margin` above.
DegreeBox regularity_box(const RingSpec& ring, const MultiDegree& d, int margin);

/// Checks the vanishing conditions inside table.box. Throws BoxTooSmall if a
/// corner lies outside it.
bool regular_by_table(const CohomologyTable& table, const RingSpec& ring, const MultiDegree& d);

bool check_regularity_by_definition(const Presentation& M, const MultiDegree& d, const DegreeBox& box,
                                    const CohomologyOptions& opts = {});

} // namespace multireg
