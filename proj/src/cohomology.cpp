#include "multireg/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "multireg/parallel.hpp"
#include "multireg/resolution.hpp"

namespace multireg {

std::vector<std::size_t> line_bundle_cohomology(int n, int c) {
  if (n < 1) throw std::invalid_argument("projective space dimension must be >= 1");
  std::vector<std::size_t> h(std::size_t(n) + 1, 0);
  if (c >= 0) h[0] = binomial(n + c, n);
  if (c <= -n - 1) h[std::size_t(n)] = binomial(-c - 1, n);
  return h;
}

std::size_t structure_sheaf_local_cohomology(const RingSpec& ring, int i, const MultiDegree& p) {
  if (i < 0) throw std::invalid_argument("cohomological index must be >= 0");
  if (p.rank() != ring.r()) throw std::invalid_argument("degree has wrong rank");
  if (i <= 1) return 0;
  const std::size_t r = ring.r();
  std::vector<std::vector<std::size_t>> h(r);
  for (std::size_t j = 0; j < r; ++j) h[j] = line_bundle_cohomology(ring.n()[j], p[j]);
  // Sum over q_1 + ... + q_r = i - 1 of the products of h^{q_j}.
  std::vector<std::size_t> acc(1, 1);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::size_t> next(acc.size() + h[j].size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t q = 0; q < h[j].size(); ++q) next[a + q] += acc[a] * h[j][q];
    acc = std::move(next);
  }
  return std::size_t(i - 1) < acc.size() ? acc[std::size_t(i - 1)] : 0;
}

GradedModule::GradedModule(const Presentation& M)
    : ring_(M.ring), F0_(M.F0), order_(ModuleOrder::plain(M.F0.rank())) {
  std::vector<Vec> cols;
  for (const auto& c : M.relations.columns())
    if (!c.empty()) cols.push_back(c);
  if (!cols.empty()) gb_ = buchberger(cols, F0_, order_, ring_).elements();
  reducer_ = std::make_unique<Reducer>(order_, ring_.field(), F0_.rank());
  for (const auto& g : gb_) reducer_->add(g);
}

const GradedModule::Piece& GradedModule::piece(const MultiDegree& e) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pieces_.find(e);
    if (it != pieces_.end()) return *it->second;
  }
  auto P = std::make_unique<Piece>();
  P->index.resize(F0_.rank());
  P->nf.resize(F0_.rank());
  for (std::uint32_t k = 0; k < F0_.rank(); ++k) {
    for (const auto& m : monomials_of_degree(ring_, e - F0_.twists[k])) {
      if (reducer_->find(m, k) >= 0) continue;
      P->index[k].emplace(m, std::uint32_t(P->basis.size()));
      P->basis.push_back({k, m});
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = pieces_.emplace(e, std::move(P));
  return *it->second;
}

SparseRow GradedModule::multiply(const MultiDegree& e, std::size_t b, const Monomial& mu) const {
  const auto& [comp, m] = piece(e).basis.at(b);
  const Monomial tm = m * mu;
  const Piece& target = piece(e + ring_.degree(mu));
  auto hit = target.index[comp].find(tm);
  if (hit != target.index[comp].end()) return {{hit->second, 1}};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = target.nf[comp].find(tm);
    if (it != target.nf[comp].end()) return it->second;
  }
  Vec r = reducer_->reduce({{tm, comp, 1}}, true);
  SparseRow row;
  for (const auto& t : r) row.push_back({target.index[t.comp].at(t.m), t.c});
  std::sort(row.begin(), row.end());
  std::lock_guard<std::mutex> lock(mu_);
  target.nf[comp].emplace(tm, row);
  return row;
}

std::size_t CohomologyTable::at(int i, const MultiDegree& p) const {
  auto it = dims.find({i, p});
  if (it == dims.end()) throw std::out_of_range("no cohomology entry for index " + std::to_string(i) + " at " + p.to_string());
  return it->second;
}

int default_t_start(const RingSpec& ring, const DegreeBox& box) {
  // Grows with how far the box reaches below -n - 1 and above 0.
  int depth = 0;
  for (std::size_t j = 0; j < ring.r(); ++j) {
    depth = std::max(depth, -box.lo[j] - ring.n()[j] - 1);
    depth = std::max(depth, box.hi[j] / 2);
  }
  return 1 + std::max(depth, 0);
}

namespace {

FreeComplex frobenius_pullback(const FreeComplex& C, int t) {
  FreeComplex out{C.ring, {}, {}};
  auto scale = [&](const FreeModuleSpec& F) {
    FreeModuleSpec G;
    for (const auto& a : F.twists) {
      MultiDegree b = a;
      for (std::size_t j = 0; j < b.rank(); ++j) b[j] *= t;
      G.twists.push_back(b);
    }
    return G;
  };
  for (const auto& F : C.terms) out.terms.push_back(scale(F));
  for (std::size_t i = 0; i < C.differentials.size(); ++i) {
    std::vector<Vec> cols;
    for (const auto& col : C.differentials[i].columns()) {
      Vec v;
      for (auto term : col) {
        for (auto& x : term.m.e) {
          if (int(x) * t > 255) throw std::overflow_error("exponent overflow in B^[t]");
          x = std::uint8_t(x * t);
        }
        term.m.refresh();
        v.push_back(term);
      }
      cols.push_back(std::move(v));
    }
    out.differentials.emplace_back(out.terms[i + 1], out.terms[i], std::move(cols), C.ring);
  }
  return out;
}

// Minimal resolutions of S/B^t (or of the Frobenius power), shared between calls.
const FreeComplex& power_resolution(const RingSpec& ring, int t, PowerKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<std::vector<int>, std::uint32_t, int, int>, std::unique_ptr<FreeComplex>> memo;
  const auto key = std::make_tuple(ring.n(), ring.characteristic(), t, int(kind));
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(key);
  if (it == memo.end()) {
    std::unique_ptr<FreeComplex> C;
    if (kind == PowerKind::Ordinary)
      C = std::make_unique<FreeComplex>(free_resolution(Presentation::quotient(ring, irrelevant_ideal_power(ring, t))));
    else
      C = std::make_unique<FreeComplex>(frobenius_pullback(free_resolution(Presentation::quotient(ring, irrelevant_ideal(ring))), t));
    it = memo.emplace(key, std::move(C)).first;
  }
  return *it->second;
}

struct RowEntry {
  std::uint32_t col;
  Monomial mu;
  Coeff c;
};

std::vector<std::size_t> ext_at(const GradedModule& M, const FreeComplex& C,
                                const std::vector<std::vector<std::vector<RowEntry>>>& by_row, const MultiDegree& p,
                                int max_index) {
  const auto& k = M.ring().field();
  const int L = int(C.terms.size()) - 1;
  const int top = std::min(max_index + 1, L);
  // Offsets of the blocks M_{p + a} inside Hom(C_i, M)_p.
  std::vector<std::vector<std::size_t>> off(std::size_t(top) + 1);
  for (int i = 0; i <= top; ++i) {
    std::size_t s = 0;
    for (const auto& a : C.terms[std::size_t(i)].twists) {
      off[std::size_t(i)].push_back(s);
      s += M.dim(p + a);
    }
    off[std::size_t(i)].push_back(s);
  }
  auto hom = [&](int i) { return i <= top ? off[std::size_t(i)].back() : 0; };
  std::vector<std::size_t> rank(std::size_t(top) + 1, 0);
  for (int i = 0; i < top && i <= max_index; ++i) {
    std::vector<SparseRow> rows;
    const auto& src = C.terms[std::size_t(i)].twists;
    for (std::size_t kk = 0; kk < src.size(); ++kk) {
      const MultiDegree e = p + src[kk];
      const std::size_t dim = M.dim(e);
      for (std::size_t s = 0; s < dim; ++s) {
        SparseRow row;
        for (const auto& re : by_row[std::size_t(i)][kk]) {
          const std::size_t base = off[std::size_t(i) + 1][re.col];
          for (const auto& [idx, c] : M.multiply(e, s, re.mu)) row.push_back({std::uint32_t(base + idx), k.mul(c, re.c)});
        }
        std::sort(row.begin(), row.end());
        SparseRow merged;
        for (const auto& x : row) {
          if (!merged.empty() && merged.back().first == x.first) merged.back().second = k.add(merged.back().second, x.second);
          else merged.push_back(x);
        }
        std::erase_if(merged, [](const auto& x) { return x.second == 0; });
        if (!merged.empty()) rows.push_back(std::move(merged));
      }
    }
    rank[std::size_t(i)] = sparse_rank(std::move(rows), hom(i + 1), k);
  }
  std::vector<std::size_t> ext(std::size_t(max_index) + 1, 0);
  for (int i = 0; i <= max_index && i <= top; ++i) {
    const std::size_t out = i < top ? rank[std::size_t(i)] : 0;
    const std::size_t in = i > 0 ? rank[std::size_t(i) - 1] : 0;
    ext[std::size_t(i)] = hom(i) - out - in;
  }
  return ext;
}

} // namespace

std::map<std::pair<int, MultiDegree>, std::size_t> ext_box(const GradedModule& M, const DegreeBox& box, int t,
                                                            int max_index, PowerKind kind, int threads) {
  if (t < 1) throw std::invalid_argument("power of B must be >= 1");
  const FreeComplex& C = power_resolution(M.ring(), t, kind);
  // For each differential and each source generator: (target column, monomial, coeff).
  std::vector<std::vector<std::vector<RowEntry>>> by_row(C.differentials.size());
  for (std::size_t i = 0; i < C.differentials.size(); ++i) {
    const auto& d = C.differentials[i];
    by_row[i].resize(d.rows());
    for (std::size_t l = 0; l < d.cols(); ++l)
      for (const auto& t : d.column(l)) by_row[i][t.comp].push_back({std::uint32_t(l), t.m, t.c});
  }
  const auto pts = box.points();
  std::vector<std::vector<std::size_t>> vals(pts.size());
  parallel_for(pts.size(), threads, [&](std::size_t j) { vals[j] = ext_at(M, C, by_row, pts[j], max_index); });
  std::map<std::pair<int, MultiDegree>, std::size_t> out;
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (int i = 0; i <= max_index; ++i) out[{i, pts[j]}] = vals[j][std::size_t(i)];
  return out;
}

CohomologyTable local_cohomology_box(const Presentation& M, const DegreeBox& box, const CohomologyOptions& opts) {
  const RingSpec& ring = M.ring;
  if (box.lo.rank() != ring.r() || box.hi.rank() != ring.r()) throw std::invalid_argument("box has wrong rank");
  if (!box.lo.leq(box.hi)) throw std::invalid_argument("box lower corner must be <= upper corner");
  int N = 0;
  for (int n : ring.n()) N += n;
  GradedModule G(M);
  const int t0 = opts.t_start ? *opts.t_start : default_t_start(ring, box);
  const int cap = t0 + opts.extra_steps;
  CohomologyTable T{box, N + 1, 0, false, {}};
  auto prev = ext_box(G, box, t0, N + 1, opts.powers, opts.threads);
  for (int t = t0 + 1; t <= cap; ++t) {
    auto cur = ext_box(G, box, t, N + 1, opts.powers, opts.threads);
    if (cur == prev) {
      T.t = t - 1;
      T.stabilized = true;
      T.dims = std::move(cur);
      return T;
    }
    prev = std::move(cur);
  }
  throw StabilizationNotReached(cap);
}

std::vector<std::pair<int, MultiDegree>> regularity_corners(const RingSpec& ring, const MultiDegree& d) {
  const std::size_t r = ring.r();
  if (d.rank() != r) throw std::invalid_argument("degree has wrong rank");
  std::vector<std::pair<int, MultiDegree>> out;
  for (std::size_t j = 0; j < r; ++j) out.push_back({0, d + MultiDegree::unit(r, j)});
  int N = 0;
  for (int n : ring.n()) N += n;
  for (int i = 1; i <= N + 1; ++i) {
    // lambda with |lambda| = i - 1 and lambda_j <= n_j + 1.
    std::vector<int> lam(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
      if (j + 1 == r) {
        if (left > ring.n()[j] + 1) return;
        lam[j] = left;
        out.push_back({i, d - MultiDegree(lam)});
        return;
      }
      for (int a = std::min(left, ring.n()[j] + 1); a >= 0; --a) {
        lam[j] = a;
        rec(j + 1, left - a);
      }
    };
    rec(0, i - 1);
  }
  return out;
}

DegreeBox regularity_box(const RingSpec& ring, const MultiDegree& d, int margin) {
  MultiDegree lo = d, hi = d + MultiDegree::ones(ring.r());
  for (const auto& [i, c] : regularity_corners(ring, d)) {
    lo = min(lo, c);
    hi = max(hi, c);
  }
  return {lo, hi + MultiDegree(ring.r(), std::max(margin, 0))};
}

bool regular_by_table(const CohomologyTable& table, const RingSpec& ring, const MultiDegree& d) {
  const auto corners = regularity_corners(ring, d);
  for (const auto& [i, c] : corners)
    if (!table.box.contains(c))
      throw BoxTooSmall("corner " + c.to_string() + " for H^" + std::to_string(i) + " lies outside the box");
  for (const auto& p : table.box.points()) {
    for (const auto& [i, c] : corners) {
      if (i > table.max_index || !c.leq(p)) continue;
      if (table.at(i, p) != 0) return false;
    }
  }
  return true;
}

bool check_regularity_by_definition(const Presentation& M, const MultiDegree& d, const DegreeBox& box,
                                    const CohomologyOptions& opts) {
  for (const auto& [i, c] : regularity_corners(M.ring, d))
    if (!box.contains(c))
      throw BoxTooSmall("corner " + c.to_string() + " for H^" + std::to_string(i) + " lies outside the box");
  return regular_by_table(local_cohomology_box(M, box, opts), M.ring, d);
}

} // namespace multireg
