#include "multireg/resolution.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "multireg/groebner.hpp"
#include "multireg/linalg.hpp"
#include "multireg/reduce.hpp"

namespace multireg {

void BettiTable::add(int i, const MultiDegree& b, std::size_t count) {
  if (count == 0) return;
  if (rank_ == 0) rank_ = b.rank();
  entries_[{i, b}] += count;
}

std::size_t BettiTable::at(int i, const MultiDegree& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<MultiDegree> BettiTable::support(int i) const {
  std::vector<MultiDegree> out;
  for (const auto& [key, v] : entries_)
    if (key.first == i && v) out.push_back(key.second);
  return out;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

std::size_t BettiTable::total(int i) const {
  std::size_t s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

namespace {

// Position of a unit (constant) entry: the row, with its coefficient.
std::optional<std::pair<std::uint32_t, Coeff>> lowest_unit_row(const Vec& col) {
  std::optional<std::pair<std::uint32_t, Coeff>> best;
  for (auto it = col.rbegin(); it != col.rend() && it->m.is_one(); ++it)
    if (!best || it->comp < best->first) best = std::make_pair(it->comp, it->c);
  return best;
}

Vec column_minus(const Vec& a, const Vec& b, const Poly& f, Coeff inv_u, const ModuleOrder& ord,
                 const PrimeField& k) {
  // a - (f/u) * b
  Vec fb = vec_mul_poly(b, scale(f, inv_u, k), ord, k);
  return vec_add_scaled(a, fb, k.neg(1), ord, k);
}

Poly row_entry(const Vec& col, std::uint32_t row) {
  std::vector<Term> ts;
  for (const auto& t : col)
    if (t.comp == row) ts.push_back({t.m, t.c});
  return Poly(std::move(ts));
}

std::vector<Vec> drop_rows(const std::vector<Vec>& cols, std::uint32_t row) {
  std::vector<Vec> out;
  out.reserve(cols.size());
  for (const auto& c : cols) {
    Vec v;
    v.reserve(c.size());
    for (const auto& t : c) {
      if (t.comp == row) continue;
      v.push_back({t.m, t.comp > row ? t.comp - 1 : t.comp, t.c});
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
  return false;
}

// Orders a Gröbner basis so that Schreyer's construction terminates within
// the number of variables: by lead component, then lex-descending lead monomial.
void schreyer_sort(std::vector<Vec>& G) {
  std::stable_sort(G.begin(), G.end(), [](const Vec& a, const Vec& b) {
    if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
    return lex_greater(a.front().m, b.front().m);
  });
}

// Builds the Schreyer frame one level at a time.
class SchreyerFrame {
public:
  SchreyerFrame(const Presentation& pruned)
      : ring_(pruned.ring), k_(ring_.field()), F_(pruned.F0), ord_(ModuleOrder::plain(pruned.F0.rank())) {
    GroebnerBasis G = buchberger(pruned.relations.columns(), F_, ord_, ring_);
    G_ = G.elements();
    schreyer_sort(G_);
  }

  bool has_next() const { return !G_.empty(); }

  /// Differential F_{level} -> F_{level-1} for the current generators, then
  /// advances to their syzygies when `advance` is set.
  MatrixOverS take(bool advance) {
    FreeModuleSpec src;
    std::vector<Monomial> lead_m;
    std::vector<std::uint32_t> lead_c;
    for (const auto& g : G_) {
      src.twists.push_back(vec_degree(g, F_, ring_));
      lead_m.push_back(g.front().m);
      lead_c.push_back(g.front().comp);
    }
    const ModuleOrder plain = ModuleOrder::plain(F_.rank());
    std::vector<Vec> cols;
    cols.reserve(G_.size());
    for (const auto& g : G_) cols.push_back(vec_reorder(g, plain));
    MatrixOverS d(src, F_, std::move(cols), ring_);
    if (!advance) {
      G_.clear();
      return d;
    }

    ModuleOrder next_ord = ord_.schreyer(lead_m, lead_c);
    Reducer red(ord_, k_, F_.rank());
    for (const auto& g : G_) red.add(g);

    std::vector<Vec> next;
    const std::size_t s = G_.size();
    for (std::size_t i = 0; i < s; ++i) {
      // Candidate leads m_ij e_i for j > i in the same component; keep the
      // divisibility-minimal ones.
      std::vector<std::pair<Monomial, std::size_t>> cand;
      for (std::size_t j = i + 1; j < s; ++j) {
        if (lead_c[j] != lead_c[i]) continue;
        cand.push_back({quotient(lcm(lead_m[i], lead_m[j]), lead_m[i]), j});
      }
      std::vector<char> keep(cand.size(), 1);
      for (std::size_t a = 0; a < cand.size(); ++a)
        for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
          if (a == b || !keep[b]) continue;
          if (divides(cand[b].first, cand[a].first) && (cand[b].first != cand[a].first || b < a)) keep[a] = 0;
        }
      for (std::size_t a = 0; a < cand.size(); ++a) {
        if (!keep[a]) continue;
        const std::size_t j = cand[a].second;
        const Monomial mi = cand[a].first;
        const Monomial mj = quotient(lcm(lead_m[i], lead_m[j]), lead_m[j]);
        Vec sp = vec_add_scaled(vec_mul_term(G_[i], mi, 1, k_), vec_mul_term(G_[j], mj, 1, k_), k_.neg(1),
                                ord_, k_);
        std::vector<VTerm> quot;
        Vec rem = red.reduce(std::move(sp), false, &quot);
        if (!rem.empty()) throw std::logic_error("Schreyer frame: S-pair did not reduce to zero");
        Vec syz{{mi, std::uint32_t(i), 1}, {mj, std::uint32_t(j), k_.neg(1)}};
        for (const auto& q : quot) syz.push_back({q.m, q.comp, k_.neg(q.c)});
        syz = vec_from_terms(std::move(syz), next_ord, k_);
        if (syz.empty() || syz.front().comp != i || syz.front().m != mi)
          throw std::logic_error("Schreyer frame: unexpected lead term");
        next.push_back(std::move(syz));
      }
    }
    schreyer_sort(next);
    // Re-sorting permutes nothing in F_{level}; only the new basis order changes.
    F_ = src;
    ord_ = std::move(next_ord);
    G_ = std::move(next);
    return d;
  }

private:
  RingSpec ring_;
  const PrimeField& k_;
  FreeModuleSpec F_;
  ModuleOrder ord_;
  std::vector<Vec> G_;
};

int default_cap(const RingSpec& ring, int cap) { return cap < 0 ? ring.num_vars() : cap; }

// Rank of the constant part of d restricted to generators of degree b.
std::map<MultiDegree, std::size_t> constant_ranks(const MatrixOverS& d, const PrimeField& k) {
  std::map<MultiDegree, std::vector<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, Coeff>>>>> blocks;
  for (std::size_t l = 0; l < d.cols(); ++l) {
    std::vector<std::pair<std::uint32_t, Coeff>> consts;
    for (const auto& t : d.column(l))
      if (t.m.is_one()) consts.push_back({t.comp, t.c});
    if (!consts.empty()) blocks[d.source().twists[l]].push_back({std::uint32_t(l), std::move(consts)});
  }
  std::map<MultiDegree, std::size_t> out;
  for (auto& [b, cols] : blocks) {
    std::vector<SparseRow> rows;
    for (auto& [l, consts] : cols) {
      std::sort(consts.begin(), consts.end());
      rows.push_back(consts);
    }
    out[b] = sparse_rank(std::move(rows), d.rows(), k);
  }
  return out;
}

std::map<MultiDegree, std::size_t> twist_counts(const FreeModuleSpec& F) {
  std::map<MultiDegree, std::size_t> out;
  for (const auto& t : F.twists) ++out[t];
  return out;
}

} // namespace

Presentation prune_presentation(const Presentation& M) {
  const auto& k = M.ring.field();
  FreeModuleSpec F0 = M.F0;
  FreeModuleSpec F1 = M.relations.source();
  std::vector<Vec> cols = M.relations.columns();
  while (true) {
    // Drop zero relations.
    for (std::size_t l = cols.size(); l-- > 0;)
      if (cols[l].empty()) {
        cols.erase(cols.begin() + long(l));
        F1.twists.erase(F1.twists.begin() + long(l));
      }
    std::optional<std::pair<std::size_t, std::pair<std::uint32_t, Coeff>>> hit;
    for (std::size_t l = 0; l < cols.size() && !hit; ++l)
      if (auto u = lowest_unit_row(cols[l])) hit = std::make_pair(l, *u);
    if (!hit) break;
    const std::size_t c = hit->first;
    const std::uint32_t r = hit->second.first;
    const Coeff inv_u = k.inv(hit->second.second);
    const ModuleOrder ord = ModuleOrder::plain(F0.rank());
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == c) continue;
      Poly f = row_entry(cols[l], r);
      if (!f.is_zero()) cols[l] = column_minus(cols[l], cols[c], f, inv_u, ord, k);
    }
    cols.erase(cols.begin() + long(c));
    F1.twists.erase(F1.twists.begin() + long(c));
    cols = drop_rows(cols, r);
    F0.twists.erase(F0.twists.begin() + long(r));
  }
  return Presentation(M.ring, MatrixOverS(F1, F0, std::move(cols), M.ring));
}

FreeComplex schreyer_resolution(const Presentation& M, int length_cap) {
  const int cap = default_cap(M.ring, length_cap);
  Presentation pruned = prune_presentation(M);
  FreeComplex C{M.ring, {pruned.F0}, {}};
  if (cap == 0) return C;
  SchreyerFrame frame(pruned);
  int level = 1;
  while (frame.has_next()) {
    MatrixOverS d = frame.take(level < cap);
    C.terms.push_back(d.source());
    C.differentials.push_back(std::move(d));
    ++level;
  }
  return C;
}

FreeComplex free_resolution(const Presentation& M, int length_cap) {
  return minimalize(schreyer_resolution(M, length_cap));
}

FreeComplex minimalize(const FreeComplex& C) {
  const auto& ring = C.ring;
  const auto& k = ring.field();
  std::vector<FreeModuleSpec> terms = C.terms;
  std::vector<std::vector<Vec>> d;
  for (const auto& m : C.differentials) d.push_back(m.columns());

  for (std::size_t i = 0; i < d.size(); ++i) {
    while (true) {
      // Row-major first unit of d_{i+1} (0-based i here).
      std::optional<std::pair<std::uint32_t, std::size_t>> pos;
      Coeff u = 0;
      for (std::size_t l = 0; l < d[i].size(); ++l)
        if (auto h = lowest_unit_row(d[i][l]))
          if (!pos || h->first < pos->first || (h->first == pos->first && l < pos->second)) {
            pos = std::make_pair(h->first, l);
            u = h->second;
          }
      if (!pos) break;
      const std::uint32_t r = pos->first;
      const std::size_t c = pos->second;
      const Coeff inv_u = k.inv(u);
      const ModuleOrder ord = ModuleOrder::plain(terms[i].rank());
      for (std::size_t l = 0; l < d[i].size(); ++l) {
        if (l == c) continue;
        Poly f = row_entry(d[i][l], r);
        if (!f.is_zero()) d[i][l] = column_minus(d[i][l], d[i][c], f, inv_u, ord, k);
      }
      // Delete column c and row r of this map.
      d[i].erase(d[i].begin() + long(c));
      d[i] = drop_rows(d[i], r);
      terms[i + 1].twists.erase(terms[i + 1].twists.begin() + long(c));
      terms[i].twists.erase(terms[i].twists.begin() + long(r));
      // Row c of the next map and column r of the previous one.
      if (i + 1 < d.size()) d[i + 1] = drop_rows(d[i + 1], std::uint32_t(c));
      if (i > 0) d[i - 1].erase(d[i - 1].begin() + long(r));
    }
  }
  // Trailing zero modules.
  while (!d.empty() && terms.back().rank() == 0) {
    terms.pop_back();
    d.pop_back();
  }
  FreeComplex out{ring, terms, {}};
  for (std::size_t i = 0; i < d.size(); ++i) out.differentials.emplace_back(terms[i + 1], terms[i], d[i], ring);
  return out;
}

bool is_minimal_complex(const FreeComplex& C) {
  for (const auto& m : C.differentials)
    for (const auto& col : m.columns())
      if (lowest_unit_row(col)) return false;
  return true;
}

BettiTable betti(const FreeComplex& C) {
  BettiTable B(C.ring.r());
  for (std::size_t i = 0; i < C.terms.size(); ++i)
    for (const auto& t : C.terms[i].twists) B.add(int(i), t);
  B.minimal = is_minimal_complex(C);
  return B;
}

BettiTable betti_numbers(const Presentation& M, int length_cap,
                         const std::function<bool(int, const BettiTable&)>& accept) {
  const int cap = default_cap(M.ring, length_cap);
  const auto& k = M.ring.field();
  Presentation pruned = prune_presentation(M);
  BettiTable B(M.ring.r());

  std::vector<FreeModuleSpec> terms{pruned.F0};
  std::vector<std::map<MultiDegree, std::size_t>> ranks{{}};  // ranks[i] for d_i; d_0 = 0
  auto finish_index = [&](int i) {
    auto counts = twist_counts(terms[i]);
    for (const auto& [b, n] : counts) {
      std::size_t r = n;
      if (auto it = ranks[i].find(b); it != ranks[i].end()) r -= it->second;
      if (std::size_t(i + 1) < ranks.size())
        if (auto it = ranks[i + 1].find(b); it != ranks[i + 1].end()) r -= it->second;
      B.add(i, b, r);
    }
    if (accept && !accept(i, B)) {
      B.complete = false;
      return false;
    }
    return true;
  };

  if (cap == 0) {
    finish_index(0);
    return B;
  }
  SchreyerFrame frame(pruned);
  int level = 1;
  while (frame.has_next()) {
    MatrixOverS d = frame.take(level < cap);
    ranks.push_back(constant_ranks(d, k));
    terms.push_back(d.source());
    if (!finish_index(level - 1)) return B;
    ++level;
  }
  finish_index(int(terms.size()) - 1);
  return B;
}

FreeComplex koszul_complex(const RingSpec& ring, const std::vector<Poly>& f) {
  const std::size_t c = f.size();
  const auto& k = ring.field();
  std::vector<std::vector<std::vector<std::size_t>>> subsets(c + 1);
  for (std::size_t mask = 0; mask < (std::size_t(1) << c); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < c; ++j)
      if (mask >> j & 1) s.push_back(j);
    subsets[s.size()].push_back(s);
  }
  for (auto& level : subsets) std::sort(level.begin(), level.end());
  std::vector<MultiDegree> deg;
  for (const auto& g : f) deg.push_back(g.degree(ring));
  FreeComplex C{ring, {}, {}};
  for (std::size_t i = 0; i <= c; ++i) {
    FreeModuleSpec F;
    for (const auto& s : subsets[i]) {
      MultiDegree t = MultiDegree::zero(ring.r());
      for (auto j : s) t += deg[j];
      F.twists.push_back(t);
    }
    C.terms.push_back(F);
  }
  for (std::size_t i = 1; i <= c; ++i) {
    std::vector<Vec> cols;
    for (const auto& s : subsets[i]) {
      Vec v;
      for (std::size_t p = 0; p < s.size(); ++p) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + long(p));
        auto it = std::lower_bound(subsets[i - 1].begin(), subsets[i - 1].end(), rest);
        std::uint32_t row = std::uint32_t(it - subsets[i - 1].begin());
        Coeff sign = p % 2 ? k.neg(1) : 1;
        for (const auto& t : f[s[p]].terms()) v.push_back({t.m, row, k.mul(sign, t.c)});
      }
      cols.push_back(std::move(v));
    }
    C.differentials.emplace_back(C.terms[i], C.terms[i - 1], std::move(cols), ring);
  }
  return C;
}

std::size_t homology_dim(const FreeComplex& C, int i, const MultiDegree& d) {
  std::size_t dim = 0;
  for (const auto& t : C.terms.at(std::size_t(i)).twists) dim += count_monomials(C.ring, d - t);
  std::size_t out_rank = i > 0 ? map_rank(C.differentials[std::size_t(i) - 1], d, C.ring) : 0;
  std::size_t in_rank =
      std::size_t(i) < C.differentials.size() ? map_rank(C.differentials[std::size_t(i)], d, C.ring) : 0;
  return dim - out_rank - in_rank;
}

} // namespace multireg
