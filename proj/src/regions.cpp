#include "multireg/regions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace multireg {

namespace {

void check_rank(const Region& a, const Region& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("region rank mismatch");
}

void compositions(std::size_t r, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == r) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = total; a >= 0; --a) {
    cur.push_back(a);
    compositions(r, total - a, cur, out);
    cur.pop_back();
  }
}

} // namespace

Region::Region(std::size_t rank, std::vector<MultiDegree> gens) : rank_(rank) {
  for (const auto& g : gens)
    if (g.rank() != rank) throw std::invalid_argument("region generator has wrong rank");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j)
      if (i != j && gens[j].leq(gens[i])) minimal = false;
    if (minimal) gens_.push_back(gens[i]);
  }
}

bool Region::contains(const MultiDegree& p) const {
  if (p.rank() != rank_) throw std::invalid_argument("point rank mismatch");
  return std::any_of(gens_.begin(), gens_.end(), [&](const MultiDegree& g) { return g.leq(p); });
}

Region region_L(int i, const MultiDegree& d) {
  if (i < 0) throw std::invalid_argument("region index must be non-negative");
  std::vector<std::vector<int>> lambdas;
  std::vector<int> cur;
  compositions(d.rank(), i, cur, lambdas);
  std::vector<MultiDegree> gens;
  for (const auto& l : lambdas) gens.push_back(d - MultiDegree(l));
  return Region(d.rank(), std::move(gens));
}

Region region_Q(int i, const MultiDegree& d) {
  if (i < 0) throw std::invalid_argument("region index must be non-negative");
  if (i == 0) return Region::orthant(d);
  return region_L(i - 1, d - MultiDegree::ones(d.rank()));
}

bool in_L(int i, const MultiDegree& d, const MultiDegree& b) { return (d - b).positive_part_sum() <= i; }

bool in_Q(int i, const MultiDegree& d, const MultiDegree& b) {
  if (i == 0) return d.leq(b);
  return in_L(i - 1, d - MultiDegree::ones(d.rank()), b);
}

Region region_intersect(const Region& a, const Region& b) {
  check_rank(a, b);
  std::vector<MultiDegree> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(max(x, y));
  return Region(a.rank(), std::move(gens));
}

Region region_union(const Region& a, const Region& b) {
  check_rank(a, b);
  std::vector<MultiDegree> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Region(a.rank(), std::move(gens));
}

bool region_contains(const Region& a, const MultiDegree& p) { return a.contains(p); }

bool region_equals(const Region& a, const Region& b) {
  check_rank(a, b);
  return a == b;
}

bool region_subset(const Region& a, const Region& b) {
  check_rank(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const MultiDegree& g) { return b.contains(g); });
}

std::vector<MultiDegree> minimal_in_box(const Region& a, const DegreeBox& box) {
  std::vector<MultiDegree> gens;
  for (const auto& g : a.generators()) {
    MultiDegree p = max(g, box.lo);
    if (p.leq(box.hi)) gens.push_back(p);
  }
  return Region(a.rank(), std::move(gens)).generators();
}

namespace {

Region betti_bound(const BettiTable& B, Region (*region)(int, const MultiDegree&)) {
  if (B.empty()) throw std::invalid_argument("Betti bound of an empty Betti table");
  std::optional<Region> acc;
  for (const auto& [key, v] : B.entries()) {
    if (!v) continue;
    Region R = region(key.first, key.second);
    acc = acc ? region_intersect(*acc, R) : R;
  }
  return *acc;
}

} // namespace

Region betti_bound_L(const BettiTable& B) { return betti_bound(B, region_L); }
Region betti_bound_Q(const BettiTable& B) { return betti_bound(B, region_Q); }

std::string region_name(char kind, int i, const MultiDegree& d) {
  return std::string(1, kind) + "_" + std::to_string(i) + d.to_string();
}

} // namespace multireg
