#pragma once

#include <optional>
#include <string>

#include "multireg/cohomology.hpp"
#include "multireg/regions.hpp"
#include "multireg/regularity.hpp"
#include "multireg/resolution.hpp"

namespace multireg {

/// "S(-1,-2)" for a generator of degree (1,2); "S" for degree 0.
std::string twist_name(const MultiDegree& b);

/// One line per homological index: F_i, rank and the twists with multiplicities.
std::string render_betti(const BettiTable& B);

/// Sorted minimal generators, one line.
std::string render_generators(const Region& R);

/// Grid over the box for r = 2: '*' minimal generator, '#' in the region, '.' outside.
std::string render_staircase(const Region& R, const DegreeBox& box);

/// SVG drawing of the region in the box (r = 2 only).
std::string render_region_svg(const Region& R, const DegreeBox& box, const std::string& title);

std::string render_verdict(const LinearityVerdict& v);

/// One grid per cohomological index for r = 2, a list of nonzero entries otherwise.
std::string render_cohomology(const CohomologyTable& T);

} // namespace multireg
