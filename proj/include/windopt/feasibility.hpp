#pragma once

#include "windopt/types.hpp"

namespace windopt {

/// Checks perimeter membership and pairwise minimum separation. Returns an
/// empty report iff the layout is feasible; magnitudes are meters of missing
/// slack. Infeasibility is data, not an error.
ViolationReport feasibility_check(const Layout& layout, const FarmRegion& region);

/// Nudges a near-feasible layout onto the feasible set: separates violating
/// pairs along their connecting line and clamps to the region. Returns true
/// when the result passes feasibility_check exactly.
bool round_to_feasible(Layout& layout, const FarmRegion& region, int max_rounds = 64);

} // namespace windopt
