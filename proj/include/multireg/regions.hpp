#pragma once

#include <string>
#include <vector>

#include "multireg/degree.hpp"
#include "multireg/resolution.hpp"

namespace multireg {

/// Upward-closed subset of Z^r stored as the antichain of its minimal elements.
class Region {
public:
  explicit Region(std::size_t rank) : rank_(rank) {}
  /// Keeps only the minimal elements of gens.
  Region(std::size_t rank, std::vector<MultiDegree> gens);
  static Region orthant(const MultiDegree& d) { return Region(d.rank(), {d}); }

  std::size_t rank() const { return rank_; }
  /// Minimal generators in lexicographic order.
  const std::vector<MultiDegree>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  bool contains(const MultiDegree& p) const;

  bool operator==(const Region& o) const { return rank_ == o.rank_ && gens_ == o.gens_; }

private:
  std::size_t rank_;
  std::vector<MultiDegree> gens_;
};

/// L_i(d) = union over |lambda| = i of (d - lambda + N^r).
Region region_L(int i, const MultiDegree& d);
/// Q_0(d) = d + N^r and Q_i(d) = L_{i-1}(d - 1) for i > 0.
Region region_Q(int i, const MultiDegree& d);

/// b in L_i(d) iff the positive parts of d - b sum to at most i.
bool in_L(int i, const MultiDegree& d, const MultiDegree& b);
bool in_Q(int i, const MultiDegree& d, const MultiDegree& b);

Region region_intersect(const Region& a, const Region& b);
Region region_union(const Region& a, const Region& b);
bool region_contains(const Region& a, const MultiDegree& p);
bool region_equals(const Region& a, const Region& b);
/// a is a subset of b.
bool region_subset(const Region& a, const Region& b);
/// Points of a inside the box, as a region relative to that box: the minimal
/// elements of a ∩ box.
std::vector<MultiDegree> minimal_in_box(const Region& a, const DegreeBox& box);

/// Intersection of L_i(b) over all nonzero beta_{i,b}.
Region betti_bound_L(const BettiTable& B);
/// Intersection of Q_i(b) over all nonzero beta_{i,b}.
Region betti_bound_Q(const BettiTable& B);

std::string region_name(char kind, int i, const MultiDegree& d);

} // namespace multireg
