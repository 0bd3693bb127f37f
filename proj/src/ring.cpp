#include "multireg/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace multireg {

Monomial Monomial::var(int v, int power) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (power < 0 || power > 255) throw std::overflow_error("exponent out of range");
  Monomial m;
  m.e[v] = std::uint8_t(power);
  m.refresh();
  return m;
}

void Monomial::refresh() {
  deg = 0;
  mask = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    deg = std::uint16_t(deg + e[v]);
    if (e[v]) mask = std::uint16_t(mask | (1u << v));
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) {
    unsigned s = unsigned(a.e[v]) + b.e[v];
    if (s > 255) throw std::overflow_error("exponent overflow");
    m.e[v] = std::uint8_t(s);
  }
  m.deg = std::uint16_t(a.deg + b.deg);
  m.mask = std::uint16_t(a.mask | b.mask);
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg || (a.mask & ~b.mask)) return false;
  for (int v = 0; v < kMaxVars; ++v)
    if (a.e[v] > b.e[v]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) m.e[v] = std::uint8_t(b.e[v] - a.e[v]);
  m.refresh();
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) m.e[v] = std::max(a.e[v], b.e[v]);
  m.refresh();
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) { return (a.mask & b.mask) == 0; }

RingSpec::RingSpec(std::vector<int> n, std::uint32_t p) : n_(std::move(n)), field_(p) {
  if (n_.empty()) throw std::invalid_argument("ring needs at least one factor");
  for (int ni : n_) {
    if (ni < 1) throw std::invalid_argument("every factor dimension must be at least 1");
    offset_.push_back(nvars_);
    for (int j = 0; j <= ni; ++j) factor_of_.push_back(offset_.size() - 1);
    nvars_ += ni + 1;
  }
  if (nvars_ > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
}

MultiDegree RingSpec::degree(const Monomial& m) const {
  MultiDegree d(r());
  for (int v = 0; v < nvars_; ++v) d[factor_of_[v]] += m.e[v];
  return d;
}

std::string RingSpec::var_name(int v) const {
  std::size_t i = factor_of_[v];
  int j = v - offset_[i];
  static const char* alias = "xyzw";
  if (r() <= 4) return std::string(1, alias[i]) + std::to_string(j);
  return "v" + std::to_string(i + 1) + "_" + std::to_string(j);
}

std::string RingSpec::monomial_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (int v = 0; v < nvars_; ++v) {
    if (!m.e[v]) continue;
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
  }
  return s;
}

std::size_t binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * std::size_t(n - k + i) / std::size_t(i);
  return r;
}

std::size_t count_monomials(const RingSpec& ring, const MultiDegree& d) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < ring.r(); ++i) {
    if (d[i] < 0) return 0;
    c *= binomial(ring.n()[i] + d[i], ring.n()[i]);
  }
  return c;
}

namespace {

// Exponent vectors of total degree deg over `count` variables.
void compositions(int count, int deg, std::vector<std::vector<int>>& out, std::vector<int>& cur) {
  if (int(cur.size()) == count - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = deg; a >= 0; --a) {
    cur.push_back(a);
    compositions(count, deg - a, out, cur);
    cur.pop_back();
  }
}

} // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const MultiDegree& d) {
  if (d.rank() != ring.r()) throw std::invalid_argument("degree rank does not match ring");
  std::vector<Monomial> acc{Monomial::one()};
  for (std::size_t i = 0; i < ring.r(); ++i) {
    if (d[i] < 0) return {};
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(ring.n()[i] + 1, d[i], comps, cur);
    std::vector<Monomial> next;
    next.reserve(acc.size() * comps.size());
    for (const auto& a : acc)
      for (const auto& c : comps) {
        Monomial m = a;
        for (int j = 0; j <= ring.n()[i]; ++j) m.e[ring.var(i, j)] = std::uint8_t(c[j]);
        m.refresh();
        next.push_back(m);
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return acc;
}

Poly Poly::constant(Coeff c) {
  if (c == 0) return {};
  return Poly({Term{Monomial::one(), c}});
}

Poly Poly::monomial(const Monomial& m, Coeff c) {
  if (c == 0) return {};
  return Poly({Term{m, c}});
}

Poly Poly::from_terms(std::vector<Term> terms, const PrimeField& k) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = k.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  return Poly(std::move(out));
}

bool Poly::is_homogeneous(const RingSpec& ring) const {
  if (terms_.empty()) return true;
  MultiDegree d = ring.degree(terms_[0].m);
  for (const auto& t : terms_)
    if (ring.degree(t.m) != d) return false;
  return true;
}

MultiDegree Poly::degree(const RingSpec& ring) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return ring.degree(terms_[0].m);
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

namespace {

Poly merge(const Poly& a, const Poly& b, Coeff bc, const PrimeField& k) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    int c = ia == ea ? -1 : ib == eb ? 1 : grevlex_cmp(ia->m, ib->m);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->m, k.mul(ib->c, bc)});
      ++ib;
    } else {
      Coeff s = k.add(ia->c, k.mul(ib->c, bc));
      if (s) out.push_back({ia->m, s});
      ++ia;
      ++ib;
    }
  }
  return Poly(std::move(out));
}

} // namespace

Poly add(const Poly& a, const Poly& b, const PrimeField& k) { return merge(a, b, 1, k); }
Poly sub(const Poly& a, const Poly& b, const PrimeField& k) {
  return merge(a, b, k.neg(1), k);
}

Poly scale(const Poly& a, Coeff c, const PrimeField& k) {
  if (c == 0) return {};
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = k.mul(t.c, c);
  return Poly(std::move(out));
}

Poly mul_term(const Poly& a, const Monomial& m, Coeff c, const PrimeField& k) {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.m * m, k.mul(t.c, c)});
  return Poly(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, const PrimeField& k) {
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) all.push_back({s.m * t.m, k.mul(s.c, t.c)});
  return Poly::from_terms(std::move(all), k);
}

std::string to_string(const Poly& f, const RingSpec& ring) {
  if (f.is_zero()) return "0";
  std::string s;
  const auto& k = ring.field();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& t = f.terms()[i];
    std::int64_t c = k.to_signed(t.c);
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (t.m.is_one()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += ring.monomial_string(t.m);
    }
  }
  return s;
}

} // namespace multireg
