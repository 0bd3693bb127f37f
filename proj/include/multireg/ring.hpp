#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "multireg/degree.hpp"
#include "multireg/field.hpp"

namespace multireg {

inline constexpr int kMaxVars = 16;

/// Exponent vector over at most kMaxVars variables, with cached total degree
/// and a bitmask of the variables that occur.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint16_t mask = 0;

  static Monomial one() { return {}; }
  static Monomial var(int v, int power = 1);

  bool is_one() const { return deg == 0; }
  void refresh();

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// b / a, assuming a divides b.
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison: >0 if a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int v = kMaxVars - 1; v >= 0; --v)
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// The Cox ring of P^{n_1} x ... x P^{n_r} over F_p.
class RingSpec {
public:
  RingSpec(std::vector<int> n, std::uint32_t p = 32003);

  std::size_t r() const { return n_.size(); }
  const std::vector<int>& n() const { return n_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  int num_vars() const { return nvars_; }

  /// Index of x_{i,j}; factors are 0-based here.
  int var(std::size_t factor, int j) const { return offset_[factor] + j; }
  std::size_t factor_of(int v) const { return factor_of_[v]; }
  int first_var(std::size_t factor) const { return offset_[factor]; }

  MultiDegree degree(const Monomial& m) const;
  std::string var_name(int v) const;
  std::string monomial_string(const Monomial& m) const;

  bool operator==(const RingSpec& o) const { return n_ == o.n_ && field_ == o.field_; }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

private:
  std::vector<int> n_;
  PrimeField field_;
  int nvars_ = 0;
  std::vector<int> offset_;
  std::vector<std::size_t> factor_of_;
};

/// All monomials of multidegree d, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const MultiDegree& d);
/// dim S_d = prod C(n_i + d_i, n_i).
std::size_t count_monomials(const RingSpec& ring, const MultiDegree& d);
std::size_t binomial(long n, long k);

struct Term {
  Monomial m;
  Coeff c;
};

/// Polynomial with terms in strictly decreasing grevlex order and no zero coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static Poly constant(Coeff c);
  static Poly monomial(const Monomial& m, Coeff c = 1);

  /// Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms, const PrimeField& k);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }

  bool is_homogeneous(const RingSpec& ring) const;
  /// Degree of the leading term; the zero polynomial has no degree.
  MultiDegree degree(const RingSpec& ring) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

private:
  std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b, const PrimeField& k);
Poly sub(const Poly& a, const Poly& b, const PrimeField& k);
Poly scale(const Poly& a, Coeff c, const PrimeField& k);
Poly mul_term(const Poly& a, const Monomial& m, Coeff c, const PrimeField& k);
Poly mul(const Poly& a, const Poly& b, const PrimeField& k);

/// Human-readable form with signed coefficients, e.g. "x0^2*y1 - 3*x1".
std::string to_string(const Poly& f, const RingSpec& ring);

} // namespace multireg
