#include "multireg/module.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multireg {

ModuleOrder ModuleOrder::plain(std::size_t rank) {
  ModuleOrder o;
  o.block_.assign(rank, 0);
  o.shift_.assign(rank, Monomial::one());
  o.key_.resize(rank);
  std::iota(o.key_.begin(), o.key_.end(), 0u);
  return o;
}

ModuleOrder ModuleOrder::blocked(std::vector<std::uint32_t> block) {
  ModuleOrder o = plain(block.size());
  o.block_ = std::move(block);
  return o;
}

ModuleOrder::ModuleOrder(std::vector<std::uint32_t> block, std::vector<Monomial> shift,
                         std::vector<std::uint32_t> key)
    : block_(std::move(block)), shift_(std::move(shift)), key_(std::move(key)) {
  if (block_.size() != key_.size() || shift_.size() != key_.size())
    throw std::invalid_argument("module order size mismatch");
  shifted_ = std::any_of(shift_.begin(), shift_.end(), [](const Monomial& m) { return !m.is_one(); });
}

ModuleOrder ModuleOrder::schreyer(const std::vector<Monomial>& lead_mono,
                                  const std::vector<std::uint32_t>& lead_comp) const {
  const std::size_t s = lead_mono.size();
  std::vector<std::uint32_t> block(s), key(s);
  std::vector<Monomial> shift(s);
  for (std::size_t i = 0; i < s; ++i) {
    block[i] = block_[lead_comp[i]];
    shift[i] = lead_mono[i] * shift_[lead_comp[i]];
  }
  std::vector<std::uint32_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    std::uint32_t ka = key_[lead_comp[a]], kb = key_[lead_comp[b]];
    return ka != kb ? ka < kb : a < b;
  });
  for (std::size_t r = 0; r < s; ++r) key[idx[r]] = std::uint32_t(r);
  ModuleOrder o(std::move(block), std::move(shift), std::move(key));
  o.shifted_ = true;
  return o;
}

Vec vec_from_terms(Vec terms, const ModuleOrder& ord, const PrimeField& k) {
  std::sort(terms.begin(), terms.end(),
            [&](const VTerm& a, const VTerm& b) { return ord.cmp(a, b) > 0; });
  Vec out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = k.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  return out;
}

Vec vec_add_scaled(const Vec& a, const Vec& b, Coeff bc, const ModuleOrder& ord,
                   const PrimeField& k) {
  Vec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ea = a.end();
  auto ib = b.begin(), eb = b.end();
  while (ia != ea || ib != eb) {
    int c = ia == ea ? -1 : ib == eb ? 1 : ord.cmp(*ia, *ib);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->m, ib->comp, k.mul(ib->c, bc)});
      ++ib;
    } else {
      Coeff s = k.add(ia->c, k.mul(ib->c, bc));
      if (s) out.push_back({ia->m, ia->comp, s});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Vec vec_mul_term(const Vec& a, const Monomial& m, Coeff c, const PrimeField& k) {
  Vec out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({t.m * m, t.comp, k.mul(t.c, c)});
  return out;
}

Vec vec_mul_poly(const Vec& a, const Poly& f, const ModuleOrder& ord, const PrimeField& k) {
  Vec all;
  all.reserve(a.size() * f.size());
  for (const auto& s : f.terms())
    for (const auto& t : a) all.push_back({t.m * s.m, t.comp, k.mul(t.c, s.c)});
  return vec_from_terms(std::move(all), ord, k);
}

Vec vec_scale(const Vec& a, Coeff c, const PrimeField& k) {
  if (c == 0) return {};
  Vec out = a;
  for (auto& t : out) t.c = k.mul(t.c, c);
  return out;
}

Vec vec_reorder(Vec a, const ModuleOrder& ord) {
  std::sort(a.begin(), a.end(), [&](const VTerm& x, const VTerm& y) { return ord.cmp(x, y) > 0; });
  return a;
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].comp != b[i].comp || a[i].c != b[i].c || a[i].m != b[i].m) return false;
  return true;
}

MultiDegree vec_degree(const Vec& v, const FreeModuleSpec& F, const RingSpec& ring) {
  if (v.empty()) throw std::domain_error("zero vector has no degree");
  return F.twists[v[0].comp] + ring.degree(v[0].m);
}

bool vec_is_homogeneous(const Vec& v, const FreeModuleSpec& F, const RingSpec& ring) {
  if (v.empty()) return true;
  MultiDegree d = vec_degree(v, F, ring);
  for (const auto& t : v)
    if (F.twists[t.comp] + ring.degree(t.m) != d) return false;
  return true;
}

MatrixOverS::MatrixOverS(FreeModuleSpec source, FreeModuleSpec target, std::vector<Vec> columns,
                         const RingSpec& ring)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.rank()) throw std::invalid_argument("column count mismatch");
  const ModuleOrder ord = ModuleOrder::plain(target_.rank());
  for (std::size_t l = 0; l < columns_.size(); ++l) {
    auto& col = columns_[l];
    for (const auto& t : col) {
      if (t.comp >= target_.rank()) throw std::invalid_argument("matrix entry row out of range");
      if (target_.twists[t.comp] + ring.degree(t.m) != source_.twists[l])
        throw std::invalid_argument("matrix entry (" + std::to_string(t.comp) + "," +
                                    std::to_string(l) + ") is not homogeneous of degree " +
                                    (source_.twists[l] - target_.twists[t.comp]).to_string());
    }
    col = vec_from_terms(std::move(col), ord, ring.field());
  }
}

MatrixOverS MatrixOverS::from_entries(FreeModuleSpec source, FreeModuleSpec target,
                                      const std::vector<std::vector<Poly>>& entries,
                                      const RingSpec& ring) {
  std::vector<Vec> cols(source.rank());
  if (entries.size() != target.rank()) throw std::invalid_argument("row count mismatch");
  for (std::size_t row = 0; row < entries.size(); ++row) {
    if (entries[row].size() != source.rank()) throw std::invalid_argument("ragged matrix");
    for (std::size_t l = 0; l < source.rank(); ++l)
      for (const auto& t : entries[row][l].terms())
        cols[l].push_back({t.m, std::uint32_t(row), t.c});
  }
  return MatrixOverS(std::move(source), std::move(target), std::move(cols), ring);
}

MatrixOverS MatrixOverS::identity(const FreeModuleSpec& F, const RingSpec& ring) {
  std::vector<Vec> cols(F.rank());
  for (std::size_t k = 0; k < F.rank(); ++k) cols[k].push_back({Monomial::one(), std::uint32_t(k), 1});
  return MatrixOverS(F, F, std::move(cols), ring);
}

Poly MatrixOverS::entry(std::size_t row, std::size_t col) const {
  std::vector<Term> ts;
  for (const auto& t : columns_.at(col))
    if (t.comp == row) ts.push_back({t.m, t.c});
  return Poly(std::move(ts));
}

MatrixOverS MatrixOverS::compose(const MatrixOverS& other, const RingSpec& ring) const {
  if (!(other.target_ == source_)) throw std::invalid_argument("composition shape mismatch");
  const auto& k = ring.field();
  const ModuleOrder ord = ModuleOrder::plain(target_.rank());
  std::vector<Vec> cols;
  for (const auto& oc : other.columns_) {
    Vec all;
    for (const auto& t : oc)
      for (const auto& s : columns_[t.comp]) all.push_back({s.m * t.m, s.comp, k.mul(s.c, t.c)});
    cols.push_back(vec_from_terms(std::move(all), ord, k));
  }
  return MatrixOverS(other.source_, target_, std::move(cols), ring);
}

bool MatrixOverS::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Vec& c) { return c.empty(); });
}

} // namespace multireg
