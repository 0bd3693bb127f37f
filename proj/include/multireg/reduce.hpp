#pragma once

#include <vector>

#include "multireg/module.hpp"

namespace multireg {

/// Division by a growing list of module elements with a per-component lead index.
class Reducer {
public:
  Reducer(const ModuleOrder& ord, const PrimeField& k, std::size_t rank)
      : ord_(&ord), k_(&k), by_comp_(rank) {}

  std::size_t size() const { return elems_.size(); }
  const Vec& element(std::size_t i) const { return elems_[i]; }
  const VTerm& lead(std::size_t i) const { return elems_[i].front(); }

  void add(Vec v) {
    const VTerm& lt = v.front();
    by_comp_[lt.comp].push_back({lt.m, std::uint32_t(elems_.size())});
    inv_lc_.push_back(k_->inv(lt.c));
    elems_.push_back(std::move(v));
  }

  long find(const Monomial& m, std::uint32_t comp) const {
    for (const auto& e : by_comp_[comp])
      if (divides(e.m, m)) return long(e.index);
    return -1;
  }

  /// Remainder of f. With full = false only lead terms are reduced. When quot is
  /// given, each step f -= c*m*g_i appends the term (m, i, c).
  Vec reduce(Vec f, bool full, std::vector<VTerm>* quot = nullptr) const {
    Vec result;
    std::size_t pos = 0;
    Vec scratch;
    while (pos < f.size()) {
      const VTerm t = f[pos];
      long i = find(t.m, t.comp);
      if (i < 0) {
        if (!full) break;
        result.push_back(t);
        ++pos;
        continue;
      }
      const Vec& g = elems_[i];
      const Monomial q = quotient(t.m, g.front().m);
      const Coeff c = k_->mul(t.c, inv_lc_[i]);
      if (quot) quot->push_back({q, std::uint32_t(i), c});
      // scratch = f[pos+1..] - c*q*g[1..]
      scratch.clear();
      scratch.reserve(f.size() - pos + g.size());
      const Coeff nc = k_->neg(c);
      std::size_t a = pos + 1, b = 1;
      VTerm gb;
      bool have_gb = false;
      while (a < f.size() || b < g.size()) {
        if (b < g.size() && !have_gb) {
          gb = {g[b].m * q, g[b].comp, k_->mul(g[b].c, nc)};
          have_gb = true;
        }
        int cmp = a == f.size() ? -1 : !have_gb ? 1 : ord_->cmp(f[a], gb);
        if (cmp > 0) {
          scratch.push_back(f[a++]);
        } else if (cmp < 0) {
          scratch.push_back(gb);
          have_gb = false;
          ++b;
        } else {
          Coeff s = k_->add(f[a].c, gb.c);
          if (s) scratch.push_back({f[a].m, f[a].comp, s});
          ++a;
          have_gb = false;
          ++b;
        }
      }
      f.swap(scratch);
      pos = 0;
    }
    if (!full) return Vec(f.begin() + long(pos), f.end());
    return result;
  }

  std::vector<Vec> release() { return std::move(elems_); }

private:
  struct LeadEntry {
    Monomial m;
    std::uint32_t index;
  };
  const ModuleOrder* ord_;
  const PrimeField* k_;
  std::vector<Vec> elems_;
  std::vector<Coeff> inv_lc_;
  std::vector<std::vector<LeadEntry>> by_comp_;
};

} // namespace multireg
