#pragma once

#include "stein/ratgeom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stein {

/// A region of a central arrangement: its sign string over the input forms
/// ('+', '-', or '0' for forms vanishing identically) and an exact interior point.
struct Region {
    std::string signs;
    Vector point;
};

/// Regions of the central arrangement { form . x = 0 } in Q^dim, found by
/// adding hyperplanes one at a time with exact feasibility checks. Proportional forms are
/// merged before the search. Result sorted by sign string.
std::vector<Region> enumerate_regions(const std::vector<Vector>& forms, int dim,
                                      const std::optional<Vector>& seed = std::nullopt);

/// First point t, t^2, ..., t^dim (t = 2, 3, ...) strict on every non-zero form.
Vector generic_point(const std::vector<Vector>& forms, int dim);

} // namespace stein
