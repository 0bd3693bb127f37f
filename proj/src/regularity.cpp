#include "multireg/regularity.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "multireg/groebner.hpp"
#include "multireg/parallel.hpp"
#include "multireg/truncation.hpp"

namespace multireg {

std::string to_string(Linearity k) {
  switch (k) {
  case Linearity::Linear: return "linear";
  case Linearity::Quasilinear: return "quasilinear";
  case Linearity::Neither: return "neither";
  }
  return "?";
}

LinearityVerdict classify_resolution(const BettiTable& B) {
  LinearityVerdict v;
  if (B.empty()) return v;
  const auto gens = B.support(0);
  if (gens.size() != 1) {
    v.kind = Linearity::Neither;
    for (const auto& b : gens) v.witnesses.push_back({0, b, "multiple generator degrees"});
    if (gens.empty()) v.witnesses.push_back({0, MultiDegree(B.rank()), "no generators in index 0"});
    return v;
  }
  const MultiDegree d = gens.front();
  v.generator_degree = d;
  std::vector<Witness> lin, quasi;
  for (const auto& [key, n] : B.entries()) {
    if (!n) continue;
    const auto& [j, b] = key;
    if (!in_L(j, -d, -b)) lin.push_back({j, b, region_name('L', j, -d)});
    if (!in_Q(j, -d, -b)) quasi.push_back({j, b, region_name('Q', j, -d)});
  }
  if (lin.empty()) return v;
  v.witnesses = std::move(lin);
  if (quasi.empty()) {
    v.kind = Linearity::Quasilinear;
  } else {
    v.kind = Linearity::Neither;
    v.witnesses.insert(v.witnesses.end(), quasi.begin(), quasi.end());
  }
  return v;
}

bool module_is_saturated_at_zero(const Presentation& M) {
  const auto& cols = M.relations.columns();
  if (std::all_of(cols.begin(), cols.end(), [](const Vec& c) { return c.empty(); })) return true;
  MatrixOverS sat = colon_ideal(M.relations, irrelevant_ideal(M.ring), M.ring);
  return submodule_contains(M.relations, sat, M.ring);
}

namespace {

// Index-by-index check of the truncation table for early abort.
bool index_ok(const BettiTable& T, int i, const MultiDegree& d, RegionMode mode) {
  for (const auto& [key, n] : T.entries()) {
    if (key.first != i || !n) continue;
    if (i == 0) {
      if (!(key.second == d)) return false;
    } else if (mode == RegionMode::L ? !in_L(i, -d, -key.second) : !in_Q(i, -d, -key.second)) {
      return false;
    }
  }
  return true;
}

bool truncation_predicate(const Presentation& M, const MultiDegree& d, RegionMode mode) {
  Presentation T = truncate_module(M, d);
  BettiTable B = betti_numbers(T, -1, [&](int i, const BettiTable& partial) { return index_ok(partial, i, d, mode); });
  return B.complete && truncation_in_region(B, d, mode);
}

} // namespace

bool truncation_in_region(const BettiTable& truncated, const MultiDegree& d, RegionMode mode) {
  if (truncated.empty()) return true;
  const auto v = classify_resolution(truncated);
  if (!v.generator_degree || !(*v.generator_degree == d)) return false;
  return mode == RegionMode::L ? v.linear() : v.quasilinear();
}

bool is_d_regular(const Presentation& M, const MultiDegree& d, bool check_saturation) {
  if (d.rank() != M.ring.r()) throw std::invalid_argument("degree has wrong rank");
  if (check_saturation && !module_is_saturated_at_zero(M)) throw NotSaturated();
  return truncation_predicate(M, d, RegionMode::Q);
}

BettiTable TruncationCache::betti(const MultiDegree& d) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
  }
  BettiTable B = betti_numbers(truncate_module(M_, d));
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(d, std::move(B)).first->second;
}

std::size_t TruncationCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

namespace {

bool dominated(const std::vector<MultiDegree>& members, const MultiDegree& p) {
  return std::any_of(members.begin(), members.end(), [&](const MultiDegree& g) { return g.leq(p); });
}

} // namespace

RegionSearchResult truncation_region(const Presentation& M, RegionMode mode, const DegreeBox& box,
                                     const RegionSearchOptions& opts) {
  const std::size_t r = M.ring.r();
  if (box.lo.rank() != r || box.hi.rank() != r) throw std::invalid_argument("box has wrong rank");
  if (!box.lo.leq(box.hi)) throw std::invalid_argument("box lower corner must be <= upper corner");

  auto eval = [&](const MultiDegree& d) {
    if (opts.cache) return truncation_in_region(opts.cache->betti(d), d, mode);
    return truncation_predicate(M, d, mode);
  };

  RegionSearchResult res{Region(r), false, {}, 0};
  std::vector<MultiDegree> members;

  if (opts.serial_reference) {
    // Lexicographic sweep; a point is only reached after everything below it.
    for (const auto& p : box.points()) {
      if (dominated(members, p)) continue;
      ++res.evaluated;
      if (eval(p)) members.push_back(p);
    }
  } else {
    // Waves of constant total degree: points in one wave are incomparable, so
    // they can be evaluated concurrently against the frontier of earlier waves.
    std::map<int, std::vector<MultiDegree>> waves;
    for (const auto& p : box.points()) waves[p.total()].push_back(p);
    for (auto& [total, pts] : waves) {
      std::vector<MultiDegree> todo;
      for (const auto& p : pts)
        if (!dominated(members, p)) todo.push_back(p);
      std::vector<char> hit(todo.size(), 0);
      parallel_for(todo.size(), opts.threads, [&](std::size_t i) { hit[i] = eval(todo[i]); });
      res.evaluated += todo.size();
      for (std::size_t i = 0; i < todo.size(); ++i)
        if (hit[i]) members.push_back(todo[i]);
    }
  }

  res.region = Region(r, members);
  for (const auto& g : res.region.generators()) {
    for (std::size_t j = 0; j < r; ++j) {
      if (g[j] == box.lo[j]) {
        res.boundary_warning = true;
        res.warnings.push_back("minimal element " + g.to_string() + " lies on the lower face of the box; the region may extend beyond it");
        break;
      }
    }
  }
  return res;
}

Region ci_regularity(const std::vector<MultiDegree>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("ci_regularity needs at least one degree");
  MultiDegree sum = MultiDegree::zero(degrees.front().rank());
  for (const auto& d : degrees) {
    if (!d.is_strictly_positive())
      throw std::invalid_argument("degree " + d.to_string() + " is not strictly positive");
    sum += d;
  }
  return region_Q(int(degrees.size()), sum);
}

int krull_dimension(const RingSpec& ring, const std::vector<Poly>& gens) {
  std::vector<Poly> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  const int n = int(ring.num_vars());
  if (nz.empty()) return n;
  GroebnerBasis G = submodule_gb(ideal_matrix(nz, ring), ring);
  std::vector<std::uint32_t> supports;
  for (const auto& e : G.elements()) {
    std::uint32_t s = 0;
    for (int v = 0; v < n; ++v)
      if (e.front().m.e[v]) s |= 1u << v;
    if (s == 0) return -1;  // unit ideal
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t U = 0; U < (1u << n); ++U) {
    const int size = std::popcount(U);
    if (size <= best) continue;
    if (std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~U) == 0; })) best = size;
  }
  return best;
}

bool verify_ci_hypotheses(const RingSpec& ring, const std::vector<Poly>& gens) {
  for (const auto& g : gens) {
    if (g.is_zero() || !g.is_homogeneous(ring)) throw std::invalid_argument("generators must be nonzero and homogeneous");
    if (!g.degree(ring).is_strictly_positive())
      throw std::invalid_argument("generator degree " + g.degree(ring).to_string() + " is not strictly positive");
  }
  const int dim = krull_dimension(ring, gens);
  if (dim != int(ring.num_vars()) - int(gens.size())) return false;
  return module_is_saturated_at_zero(Presentation::quotient(ring, gens));
}

} // namespace multireg
