#pragma once

#include <functional>
#include <map>
#include <vector>

#include "multireg/presentation.hpp"

namespace multireg {

/// Chain complex of free modules; differentials[i] : terms[i+1] -> terms[i].
struct FreeComplex {
  RingSpec ring;
  std::vector<FreeModuleSpec> terms;
  std::vector<MatrixOverS> differentials;

  std::size_t length() const { return differentials.size(); }
};

/// Multiplicities beta_{i,b}.
class BettiTable {
public:
  BettiTable() = default;
  explicit BettiTable(std::size_t rank) : rank_(rank) {}

  void add(int i, const MultiDegree& b, std::size_t count = 1);
  std::size_t at(int i, const MultiDegree& b) const;
  const std::map<std::pair<int, MultiDegree>, std::size_t>& entries() const { return entries_; }
  /// beta_i(M) = {b : beta_{i,b} != 0}, sorted.
  std::vector<MultiDegree> support(int i) const;
  int max_index() const;
  std::size_t total(int i) const;
  bool empty() const { return entries_.empty(); }
  std::size_t rank() const { return rank_; }

  /// False for tables counted from a complex that still has unit entries.
  bool minimal = true;
  /// False when the computation stopped early.
  bool complete = true;

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

private:
  std::size_t rank_ = 0;
  std::map<std::pair<int, MultiDegree>, std::size_t> entries_;
};

/// Removes generators that are killed by relations with a unit entry.
Presentation prune_presentation(const Presentation& M);

/// Schreyer resolution (generally not minimal) of a pruned presentation of M.
/// length_cap < 0 means the number of variables.
FreeComplex schreyer_resolution(const Presentation& M, int length_cap = -1);

/// Minimal free resolution of M.
FreeComplex free_resolution(const Presentation& M, int length_cap = -1);

/// Splits off trivial summands until no differential has a unit entry.
FreeComplex minimalize(const FreeComplex& C);

bool is_minimal_complex(const FreeComplex& C);

/// Twist multiplicities of C (flagged non-minimal when C has unit entries).
BettiTable betti(const FreeComplex& C);

/// Graded Betti numbers of M computed from the Schreyer frame as
/// dim Tor_i(M,k)_b = #F_i(b) - rank(d_i|_b mod m) - rank(d_{i+1}|_b mod m).
/// If `accept` is given it is called with each finished index i and the table so
/// far; returning false stops the computation (table marked incomplete).
BettiTable betti_numbers(const Presentation& M, int length_cap = -1,
                         const std::function<bool(int, const BettiTable&)>& accept = {});

/// Koszul complex on the given homogeneous polynomials (for tests and examples).
FreeComplex koszul_complex(const RingSpec& ring, const std::vector<Poly>& f);

/// dim of the homology of C at index i in degree d (i >= 0).
std::size_t homology_dim(const FreeComplex& C, int i, const MultiDegree& d);

} // namespace multireg
