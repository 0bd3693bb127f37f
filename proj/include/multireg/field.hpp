#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multireg {

using Coeff = std::uint32_t;

/// Arithmetic in the prime field F_p. Elements are stored as integers in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                  " is not prime");
    }
  }

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Coeff(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : Coeff(std::uint64_t(a) + p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return Coeff((std::uint64_t(a) * b) % p_); }

  Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return Coeff(t);
  }

  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_int(std::int64_t v) const {
    std::int64_t m = v % std::int64_t(p_);
    if (m < 0) m += p_;
    return Coeff(m);
  }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? std::int64_t(a) - std::int64_t(p_) : std::int64_t(a);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

} // namespace multireg
