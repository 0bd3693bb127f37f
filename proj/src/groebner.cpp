#include "multireg/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "multireg/reduce.hpp"

namespace multireg {

GroebnerBasis::GroebnerBasis(FreeModuleSpec ambient, ModuleOrder order, std::vector<Vec> elements,
                             bool reduced)
    : ambient_(std::move(ambient)),
      order_(std::move(order)),
      elements_(std::move(elements)),
      reduced_(reduced),
      by_comp_(ambient_.rank()) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& lt = elements_[i].front();
    by_comp_[lt.comp].push_back({lt.m, std::uint32_t(i)});
  }
}

long GroebnerBasis::find_divisor(const Monomial& m, std::uint32_t comp) const {
  for (const auto& e : by_comp_[comp])
    if (divides(e.m, m)) return long(e.index);
  return -1;
}

namespace {

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int deg;
};

int total(const MultiDegree& d) { return d.total(); }

Vec spoly(const Vec& a, const Vec& b, const Monomial& l, const PrimeField& k,
          const ModuleOrder& ord) {
  const auto& la = a.front();
  const auto& lb = b.front();
  Vec fa = vec_mul_term(a, quotient(l, la.m), k.inv(la.c), k);
  Vec fb = vec_mul_term(b, quotient(l, lb.m), k.inv(lb.c), k);
  return vec_add_scaled(fa, fb, k.neg(1), ord, k);
}

Vec make_monic(Vec v, const PrimeField& k) {
  if (v.empty()) return v;
  Coeff inv = k.inv(v.front().c);
  if (inv != 1)
    for (auto& t : v) t.c = k.mul(t.c, inv);
  return v;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Vec>& gens, const FreeModuleSpec& F,
                         const ModuleOrder& order, const RingSpec& ring,
                         const GroebnerOptions& opts) {
  const auto& k = ring.field();
  if (order.rank() != F.rank()) throw std::invalid_argument("module order rank mismatch");
  const bool ideal_case = F.rank() == 1;

  // Input generators sorted by the order, grouped by total degree.
  std::vector<std::pair<int, Vec>> input;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].empty()) continue;
    Vec v = vec_reorder(gens[g], order);
    for (const auto& t : v)
      if (t.comp >= F.rank()) throw std::invalid_argument("generator component out of range");
    if (!vec_is_homogeneous(v, F, ring))
      throw std::invalid_argument("buchberger: generator " + std::to_string(g) + " is not homogeneous");
    input.push_back({total(vec_degree(v, F, ring)), std::move(v)});
  }
  std::stable_sort(input.begin(), input.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  Reducer red(order, k, F.rank());
  std::vector<Pair> pairs;

  auto upper = [&](std::uint32_t comp) { return order.block(comp) >= 1; };

  auto add_element = [&](Vec v) {
    const std::uint32_t t = std::uint32_t(red.size());
    const VTerm lt = v.front();
    std::vector<Pair> fresh;
    const bool skip_all = opts.skip_upper_block_pairs && upper(lt.comp);
    if (!skip_all) {
      for (std::uint32_t i = 0; i < t; ++i) {
        const VTerm& li = red.lead(i);
        if (li.comp != lt.comp) continue;
        Monomial l = lcm(li.m, lt.m);
        fresh.push_back({i, t, l, lt.comp, total(F.twists[lt.comp]) + l.deg});
      }
    }
    if (opts.gebauer_moller) {
      // Chain criterion on old pairs.
      std::erase_if(pairs, [&](const Pair& p) {
        if (p.comp != lt.comp || !divides(lt.m, p.lcm)) return false;
        Monomial li = lcm(red.lead(p.i).m, lt.m), lj = lcm(red.lead(p.j).m, lt.m);
        return li != p.lcm && lj != p.lcm;
      });
      // M criterion: drop pairs whose lcm is a proper multiple of another new lcm.
      std::vector<char> dead(fresh.size(), 0);
      for (std::size_t a = 0; a < fresh.size(); ++a)
        for (std::size_t b = 0; b < fresh.size(); ++b)
          if (a != b && fresh[b].lcm != fresh[a].lcm && divides(fresh[b].lcm, fresh[a].lcm)) {
            dead[a] = 1;
            break;
          }
      // F criterion and the product criterion on groups with equal lcm.
      std::vector<Pair> kept;
      std::vector<char> seen(fresh.size(), 0);
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (dead[a] || seen[a]) continue;
        bool coprime_in_group = false;
        for (std::size_t b = a; b < fresh.size(); ++b) {
          if (dead[b] || fresh[b].lcm != fresh[a].lcm) continue;
          seen[b] = 1;
          if (ideal_case && coprime(red.lead(fresh[b].i).m, lt.m)) coprime_in_group = true;
        }
        if (!coprime_in_group) kept.push_back(fresh[a]);
      }
      fresh = std::move(kept);
    } else if (ideal_case) {
      std::erase_if(fresh, [&](const Pair& p) { return coprime(red.lead(p.i).m, lt.m); });
    }
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    red.add(std::move(v));
  };

  std::size_t next_input = 0;
  while (next_input < input.size() || !pairs.empty()) {
    int D = next_input < input.size() ? input[next_input].first : INT32_MAX;
    for (const auto& p : pairs) D = std::min(D, p.deg);

    std::vector<Pair> now;
    std::vector<Pair> later;
    for (auto& p : pairs) (p.deg == D ? now : later).push_back(p);
    pairs = std::move(later);
    std::sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
      int c = order.cmp(a.lcm, a.comp, b.lcm, b.comp);
      if (c) return c < 0;
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });

    for (; next_input < input.size() && input[next_input].first == D; ++next_input) {
      Vec r = red.reduce(input[next_input].second, false);
      if (!r.empty()) add_element(make_monic(std::move(r), k));
    }
    for (const auto& p : now) {
      Vec s = spoly(red.element(p.i), red.element(p.j), p.lcm, k, order);
      Vec r = red.reduce(std::move(s), false);
      if (!r.empty()) add_element(make_monic(std::move(r), k));
    }
  }

  std::vector<Vec> elems = red.release();
  if (!opts.reduce) return GroebnerBasis(F, order, std::move(elems), false);

  // Minimal basis: drop elements whose lead is divisible by another lead.
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const VTerm& li = elems[i].front();
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j) continue;
      const VTerm& lj = elems[j].front();
      if (lj.comp == li.comp && divides(lj.m, li.m) && (lj.m != li.m || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(elems[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Vec& a, const Vec& b) { return order.cmp(a.front(), b.front()) < 0; });
  // Tail reduction against the others.
  std::vector<Vec> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Reducer others(order, k, F.rank());
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.add(minimal[j]);
    Vec tail(minimal[i].begin() + 1, minimal[i].end());
    Vec r = others.reduce(std::move(tail), true);
    Vec v{minimal[i].front()};
    v.insert(v.end(), r.begin(), r.end());
    reduced[i] = make_monic(std::move(v), k);
  }
  return GroebnerBasis(F, order, std::move(reduced), true);
}

Vec normal_form(const Vec& f, const GroebnerBasis& G, const RingSpec& ring) {
  Reducer red(G.order(), ring.field(), G.ambient().rank());
  for (const auto& g : G.elements()) red.add(g);
  return red.reduce(vec_reorder(f, G.order()), true);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G, const RingSpec& ring) {
  const auto& k = ring.field();
  Reducer red(G.order(), k, G.ambient().rank());
  for (const auto& g : G.elements()) red.add(g);
  const auto& E = G.elements();
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      if (E[i].front().comp != E[j].front().comp) continue;
      Monomial l = lcm(E[i].front().m, E[j].front().m);
      if (!red.reduce(spoly(E[i], E[j], l, k, G.order()), false).empty()) return false;
    }
  return true;
}

GroebnerBasis submodule_gb(const MatrixOverS& N, const RingSpec& ring) {
  return buchberger(N.columns(), N.target(), ModuleOrder::plain(N.rows()), ring);
}

MatrixOverS gb_matrix(const GroebnerBasis& G, const RingSpec& ring) {
  FreeModuleSpec src;
  for (const auto& g : G.elements()) src.twists.push_back(vec_degree(g, G.ambient(), ring));
  return MatrixOverS(src, G.ambient(), G.elements(), ring);
}

bool same_submodule(const MatrixOverS& a, const MatrixOverS& b, const RingSpec& ring) {
  if (!(a.target() == b.target())) return false;
  GroebnerBasis ga = submodule_gb(a, ring), gb = submodule_gb(b, ring);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!vec_equal(ga.elements()[i], gb.elements()[i])) return false;
  return true;
}

bool submodule_contains(const MatrixOverS& b, const MatrixOverS& a, const RingSpec& ring) {
  GroebnerBasis gb = submodule_gb(b, ring);
  for (const auto& c : a.columns())
    if (!normal_form(c, gb, ring).empty()) return false;
  return true;
}

MatrixOverS syzygies(const MatrixOverS& M, const RingSpec& ring) {
  const std::size_t rows = M.rows(), cols = M.cols();
  FreeModuleSpec big = M.target();
  for (const auto& t : M.source().twists) big.twists.push_back(t);
  std::vector<std::uint32_t> block(rows + cols, 0);
  for (std::size_t c = 0; c < cols; ++c) block[rows + c] = 1;
  const ModuleOrder ord = ModuleOrder::blocked(block);

  std::vector<Vec> gens;
  for (std::size_t l = 0; l < cols; ++l) {
    Vec v = M.column(l);
    v.push_back({Monomial::one(), std::uint32_t(rows + l), 1});
    gens.push_back(std::move(v));
  }
  GroebnerOptions opts;
  opts.skip_upper_block_pairs = true;
  opts.reduce = false;
  GroebnerBasis G = buchberger(gens, big, ord, ring, opts);

  std::vector<Vec> syz;
  for (const auto& g : G.elements()) {
    if (g.front().comp < rows) continue;
    Vec s;
    for (const auto& t : g) s.push_back({t.m, std::uint32_t(t.comp - rows), t.c});
    syz.push_back(std::move(s));
  }
  GroebnerBasis R = buchberger(syz, M.source(), ModuleOrder::plain(cols), ring);
  return gb_matrix(R, ring);
}

MatrixOverS colon(const MatrixOverS& N, const Poly& f, const RingSpec& ring) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!f.is_homogeneous(ring)) throw std::invalid_argument("colon by an inhomogeneous polynomial");
  const std::size_t rk = N.rows();
  const MultiDegree df = f.degree(ring);
  FreeModuleSpec src;
  std::vector<Vec> cols;
  const ModuleOrder ord = ModuleOrder::plain(rk);
  for (std::size_t c = 0; c < rk; ++c) {
    src.twists.push_back(N.target().twists[c] + df);
    Vec e{{Monomial::one(), std::uint32_t(c), 1}};
    cols.push_back(vec_mul_poly(e, f, ord, ring.field()));
  }
  for (std::size_t l = 0; l < N.cols(); ++l) {
    src.twists.push_back(N.source().twists[l]);
    cols.push_back(N.column(l));
  }
  MatrixOverS big(src, N.target(), cols, ring);
  MatrixOverS Z = syzygies(big, ring);
  std::vector<Vec> proj;
  for (const auto& z : Z.columns()) {
    Vec v;
    for (const auto& t : z)
      if (t.comp < rk) v.push_back(t);
    if (!v.empty()) proj.push_back(std::move(v));
  }
  GroebnerBasis R = buchberger(proj, N.target(), ord, ring);
  return gb_matrix(R, ring);
}

MatrixOverS intersect_submodules(const MatrixOverS& N1, const MatrixOverS& N2,
                                 const RingSpec& ring) {
  if (!(N1.target() == N2.target())) throw std::invalid_argument("intersection: ambient mismatch");
  FreeModuleSpec src = N1.source();
  for (const auto& t : N2.source().twists) src.twists.push_back(t);
  std::vector<Vec> cols = N1.columns();
  cols.insert(cols.end(), N2.columns().begin(), N2.columns().end());
  MatrixOverS big(src, N1.target(), cols, ring);
  MatrixOverS Z = syzygies(big, ring);
  const auto& k = ring.field();
  const ModuleOrder ord = ModuleOrder::plain(N1.rows());
  std::vector<Vec> out;
  for (const auto& z : Z.columns()) {
    Vec all;
    for (const auto& t : z) {
      if (t.comp >= N1.cols()) continue;
      for (const auto& s : N1.column(t.comp)) all.push_back({s.m * t.m, s.comp, k.mul(s.c, t.c)});
    }
    Vec v = vec_from_terms(std::move(all), ord, k);
    if (!v.empty()) out.push_back(std::move(v));
  }
  GroebnerBasis R = buchberger(out, N1.target(), ord, ring);
  return gb_matrix(R, ring);
}

MatrixOverS colon_ideal(const MatrixOverS& N, const std::vector<Poly>& J, const RingSpec& ring) {
  if (J.empty()) throw std::invalid_argument("colon by the empty ideal");
  MatrixOverS acc = colon(N, J[0], ring);
  for (std::size_t g = 1; g < J.size(); ++g) acc = intersect_submodules(acc, colon(N, J[g], ring), ring);
  return acc;
}

MatrixOverS saturate(const MatrixOverS& N, const std::vector<Poly>& J, const RingSpec& ring) {
  MatrixOverS cur = gb_matrix(submodule_gb(N, ring), ring);
  while (true) {
    MatrixOverS next = colon_ideal(cur, J, ring);
    if (same_submodule(next, cur, ring)) return next;
    cur = std::move(next);
  }
}

std::vector<Poly> irrelevant_ideal(const RingSpec& ring) { return irrelevant_ideal_power(ring, 1); }

std::vector<Poly> irrelevant_ideal_power(const RingSpec& ring, int t) {
  // B^t is generated by all monomials of degree (t,...,t).
  std::vector<Poly> out;
  for (const auto& m : monomials_of_degree(ring, MultiDegree(ring.r(), t))) out.push_back(Poly::monomial(m));
  return out;
}

MatrixOverS ideal_matrix(const std::vector<Poly>& gens, const RingSpec& ring) {
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
  return MatrixOverS(src, tgt, cols, ring);
}

std::vector<Poly> ideal_generators(const MatrixOverS& N) {
  if (N.rows() != 1) throw std::invalid_argument("not an ideal");
  std::vector<Poly> out;
  for (std::size_t l = 0; l < N.cols(); ++l) out.push_back(N.entry(0, l));
  return out;
}

} // namespace multireg
