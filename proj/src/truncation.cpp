#include "multireg/truncation.hpp"

#include <algorithm>
#include <stdexcept>

#include "multireg/resolution.hpp"

namespace multireg {

namespace {

// Divisor of t of degree `deg`, taking exponents from the lowest-index
// variables of each factor first.
Monomial canonical_divisor(const RingSpec& ring, const Monomial& t, const MultiDegree& deg) {
  Monomial m;
  for (std::size_t i = 0; i < ring.r(); ++i) {
    int need = deg[i];
    for (int j = 0; j <= ring.n()[i] && need > 0; ++j) {
      int v = ring.var(i, j);
      int take = std::min<int>(need, t.e[v]);
      m.e[v] = std::uint8_t(take);
      need -= take;
    }
    if (need > 0) throw std::logic_error("canonical_divisor: degree too large");
  }
  m.refresh();
  return m;
}

} // namespace

FreeTruncation truncate_free(const RingSpec& ring, const FreeModuleSpec& F, const MultiDegree& d) {
  FreeModuleSpec G;
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < F.rank(); ++k) {
    const MultiDegree c = max(F.twists[k], d);
    for (const auto& mu : monomials_of_degree(ring, c - F.twists[k])) {
      G.twists.push_back(c);
      cols.push_back({{mu, std::uint32_t(k), 1}});
    }
  }
  MatrixOverS inc(G, F, std::move(cols), ring);
  return {std::move(G), std::move(inc)};
}

Presentation truncate_module(const Presentation& M, const MultiDegree& d, bool prune) {
  const RingSpec& ring = M.ring;
  const auto& k = ring.field();
  if (d.rank() != ring.r()) throw std::invalid_argument("truncation degree has wrong rank");
  FreeTruncation T = truncate_free(ring, M.F0, d);
  const FreeModuleSpec& G = T.generators;

  // Generator index of mu * e_k.
  std::vector<std::vector<Monomial>> mons(M.F0.rank());
  std::vector<std::size_t> start(M.F0.rank());
  {
    std::size_t pos = 0;
    for (std::size_t c = 0; c < M.F0.rank(); ++c) {
      start[c] = pos;
      mons[c] = monomials_of_degree(ring, max(M.F0.twists[c], d) - M.F0.twists[c]);
      pos += mons[c].size();
    }
  }
  auto gen_of = [&](std::uint32_t comp, const Monomial& mu) -> std::uint32_t {
    const auto& v = mons[comp];
    auto it = std::lower_bound(v.begin(), v.end(), mu,
                               [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
    if (it == v.end() || *it != mu) throw std::logic_error("truncate_module: missing generator");
    return std::uint32_t(start[comp] + std::size_t(it - v.begin()));
  };

  FreeModuleSpec rel_src;
  std::vector<Vec> rels;

  // (a) exchange relations x * g_{nu/x} - x' * g_{nu/x'}.
  for (std::uint32_t c = 0; c < M.F0.rank(); ++c) {
    const MultiDegree base = max(M.F0.twists[c], d) - M.F0.twists[c];
    for (std::size_t i = 0; i < ring.r(); ++i) {
      const MultiDegree up = base + MultiDegree::unit(ring.r(), i);
      for (const auto& nu : monomials_of_degree(ring, up)) {
        std::vector<int> vars;
        for (int j = 0; j <= ring.n()[i]; ++j)
          if (nu.e[ring.var(i, j)]) vars.push_back(ring.var(i, j));
        for (std::size_t a = 0; a + 1 < vars.size(); ++a) {
          Monomial x = Monomial::var(vars[a]), y = Monomial::var(vars[a + 1]);
          Vec v{{x, gen_of(c, quotient(nu, x)), 1}, {y, gen_of(c, quotient(nu, y)), k.neg(1)}};
          rels.push_back(std::move(v));
          rel_src.twists.push_back(M.F0.twists[c] + up);
        }
      }
    }
  }

  // (b) lifts of rho_l * nu.
  for (std::size_t l = 0; l < M.relations.cols(); ++l) {
    const Vec& rho = M.relations.column(l);
    if (rho.empty()) continue;
    const MultiDegree a = M.relations.source().twists[l];
    const MultiDegree top = max(a, d);
    for (const auto& nu : monomials_of_degree(ring, top - a)) {
      Vec v;
      for (const auto& t : rho) {
        Monomial tm = t.m * nu;
        const MultiDegree need = max(M.F0.twists[t.comp], d) - M.F0.twists[t.comp];
        Monomial mu = canonical_divisor(ring, tm, need);
        v.push_back({quotient(tm, mu), gen_of(t.comp, mu), t.c});
      }
      rels.push_back(std::move(v));
      rel_src.twists.push_back(top);
    }
  }

  Presentation out(ring, MatrixOverS(rel_src, G, std::move(rels), ring));
  return prune ? prune_presentation(out) : out;
}

} // namespace multireg
