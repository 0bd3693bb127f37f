#pragma once

#include "multireg/presentation.hpp"

namespace multireg {

struct FreeTruncation {
  FreeModuleSpec generators;
  /// generators -> F, with image F_{>=d}.
  MatrixOverS inclusion;
};

/// Free cover of F_{>=d}: for a component of twist b, one generator per monomial
/// of degree max(b,d) - b.
FreeTruncation truncate_free(const RingSpec& ring, const FreeModuleSpec& F, const MultiDegree& d);

/// Presentation of M_{>=d}. Generators come from truncate_free(F0, d); relations
/// are the linear exchange relations among those generators plus lifts of
/// rho * nu for each relation rho and each monomial nu moving it into degree >= d.
/// With `prune` set, unit relations are eliminated before returning.
Presentation truncate_module(const Presentation& M, const MultiDegree& d, bool prune = false);

} // namespace multireg
