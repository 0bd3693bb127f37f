#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multireg/regions.hpp"
#include "multireg/resolution.hpp"

namespace multireg {

struct NotSaturated : std::runtime_error {
  NotSaturated()
      : std::runtime_error("module has B-torsion (H^0_B(M) != 0); the truncation criterion does not apply") {}
};

enum class Linearity { Linear, Quasilinear, Neither };
std::string to_string(Linearity k);

struct Witness {
  int index;
  MultiDegree twist;
  /// Name of the violated region, e.g. "L_1(-1,0)", or a short reason.
  std::string violated;
};

struct LinearityVerdict {
  Linearity kind = Linearity::Linear;
  /// Generator degree d (unset when index 0 has several degrees or the table is empty).
  std::optional<MultiDegree> generator_degree;
  /// Violations of linearity (when not linear) and of quasilinearity (when neither).
  std::vector<Witness> witnesses;
  bool linear() const { return kind == Linearity::Linear; }
  bool quasilinear() const { return kind != Linearity::Neither; }
};

/// Linear: twists of F_j in L_j(-d) after negation, quasilinear: in Q_j(-d).
/// The empty table (zero module) counts as linear.
LinearityVerdict classify_resolution(const BettiTable& B);

/// (relations :_{F0} B) == relations.
bool module_is_saturated_at_zero(const Presentation& M);

/// M_{>=d} has a quasilinear resolution generated in degree d.
/// Throws NotSaturated unless check_saturation is false.
bool is_d_regular(const Presentation& M, const MultiDegree& d, bool check_saturation = true);

enum class RegionMode { L, Q };

/// Memo of Betti tables of truncations of one module, safe for concurrent use.
class TruncationCache {
public:
  explicit TruncationCache(const Presentation& M) : M_(M) {}
  const Presentation& module() const { return M_; }
  /// Minimal Betti table of M_{>=d}.
  BettiTable betti(const MultiDegree& d);
  std::size_t size() const;

private:
  Presentation M_;
  mutable std::mutex mu_;
  std::map<MultiDegree, BettiTable> memo_;
};

struct RegionSearchOptions {
  /// 0 = OpenMP default, 1 = serial.
  int threads = 0;
  /// Use the serial reference sweep (no pruning by waves, plain lexicographic order).
  bool serial_reference = false;
  /// Shared memo; when null a private one is used.
  std::shared_ptr<TruncationCache> cache;
};

struct RegionSearchResult {
  Region region;
  /// Set when a minimal element lies on the lower face of the box.
  bool boundary_warning = false;
  std::vector<std::string> warnings;
  /// Number of truncations actually resolved.
  std::size_t evaluated = 0;
};

/// True iff M_{>=d} has a linear (mode L) or quasilinear (mode Q) resolution
/// generated in degree d.
bool truncation_in_region(const BettiTable& truncated, const MultiDegree& d, RegionMode mode);

/// Minimal elements, inside box, of the set of d where truncation_in_region holds.
RegionSearchResult truncation_region(const Presentation& M, RegionMode mode, const DegreeBox& box,
                                     const RegionSearchOptions& opts = {});

/// Q_c(sum of degrees); every degree must be strictly positive.
Region ci_regularity(const std::vector<MultiDegree>& degrees);

/// Codimension equals the number of generators and S/<gens> has no B-torsion.
bool verify_ci_hypotheses(const RingSpec& ring, const std::vector<Poly>& gens);

/// Krull dimension of S/<gens>, read off the initial ideal.
int krull_dimension(const RingSpec& ring, const std::vector<Poly>& gens);

} // namespace multireg
