#pragma once

#include <cstdint>
#include <vector>

#include "multireg/ring.hpp"

namespace multireg {

/// ⊕_k S(-twists[k]).
struct FreeModuleSpec {
  std::vector<MultiDegree> twists;

  std::size_t rank() const { return twists.size(); }
  bool operator==(const FreeModuleSpec& o) const = default;
};

struct VTerm {
  Monomial m;
  std::uint32_t comp;
  Coeff c;
};

/// Monomial order on a free module. Terms m*e_c are compared by block (lower
/// block is larger), then grevlex of m*shift[c], then key (smaller key is
/// larger). With no shifts and key = component index this is term-over-position
/// with the lower component winning ties.
class ModuleOrder {
public:
  ModuleOrder() = default;
  static ModuleOrder plain(std::size_t rank);
  static ModuleOrder blocked(std::vector<std::uint32_t> block);
  ModuleOrder(std::vector<std::uint32_t> block, std::vector<Monomial> shift,
              std::vector<std::uint32_t> key);

  std::size_t rank() const { return key_.size(); }
  std::uint32_t block(std::uint32_t c) const { return block_[c]; }
  const Monomial& shift(std::uint32_t c) const { return shift_[c]; }
  std::uint32_t key(std::uint32_t c) const { return key_[c]; }
  bool has_shifts() const { return shifted_; }

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (block_[ca] != block_[cb]) return block_[ca] < block_[cb] ? 1 : -1;
    int c = shifted_ ? grevlex_cmp(a * shift_[ca], b * shift_[cb]) : grevlex_cmp(a, b);
    if (c) return c;
    if (key_[ca] != key_[cb]) return key_[ca] < key_[cb] ? 1 : -1;
    return 0;
  }
  int cmp(const VTerm& a, const VTerm& b) const { return cmp(a.m, a.comp, b.m, b.comp); }

  /// Order induced on ⊕ S e_i by elements with lead terms (lead_mono[i], lead_comp[i]).
  ModuleOrder schreyer(const std::vector<Monomial>& lead_mono,
                       const std::vector<std::uint32_t>& lead_comp) const;

private:
  std::vector<std::uint32_t> block_;
  std::vector<Monomial> shift_;
  std::vector<std::uint32_t> key_;
  bool shifted_ = false;
};

/// Element of a free module; terms strictly decreasing in some ModuleOrder.
using Vec = std::vector<VTerm>;

Vec vec_from_terms(Vec terms, const ModuleOrder& ord, const PrimeField& k);
Vec vec_add_scaled(const Vec& a, const Vec& b, Coeff bc, const ModuleOrder& ord,
                   const PrimeField& k);
Vec vec_mul_term(const Vec& a, const Monomial& m, Coeff c, const PrimeField& k);
Vec vec_mul_poly(const Vec& a, const Poly& f, const ModuleOrder& ord, const PrimeField& k);
Vec vec_scale(const Vec& a, Coeff c, const PrimeField& k);
/// Re-sorts terms for a different order.
Vec vec_reorder(Vec a, const ModuleOrder& ord);
bool vec_equal(const Vec& a, const Vec& b);

/// Degree of a homogeneous element in ⊕ S(-twists[k]).
MultiDegree vec_degree(const Vec& v, const FreeModuleSpec& F, const RingSpec& ring);
bool vec_is_homogeneous(const Vec& v, const FreeModuleSpec& F, const RingSpec& ring);

/// Sparse homogeneous matrix target <- source; column l is an element of target
/// stored in the plain order of target.
class MatrixOverS {
public:
  MatrixOverS(FreeModuleSpec source, FreeModuleSpec target, std::vector<Vec> columns,
              const RingSpec& ring);
  /// Builds from dense entries[row][col].
  static MatrixOverS from_entries(FreeModuleSpec source, FreeModuleSpec target,
                                  const std::vector<std::vector<Poly>>& entries,
                                  const RingSpec& ring);
  static MatrixOverS identity(const FreeModuleSpec& F, const RingSpec& ring);

  const FreeModuleSpec& source() const { return source_; }
  const FreeModuleSpec& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const std::vector<Vec>& columns() const { return columns_; }
  const Vec& column(std::size_t l) const { return columns_[l]; }
  Poly entry(std::size_t row, std::size_t col) const;

  /// Product this * other (other's target must equal this source).
  MatrixOverS compose(const MatrixOverS& other, const RingSpec& ring) const;
  bool is_zero() const;

private:
  FreeModuleSpec source_;
  FreeModuleSpec target_;
  std::vector<Vec> columns_;
};

} // namespace multireg
