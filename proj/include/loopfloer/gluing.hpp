#pragma once

#include "loopfloer/loops.hpp"
#include "loopfloer/slope.hpp"

#include <vector>

namespace loopfloer {

/** Every r/s is strict for the first set or s/r is strict for the second. */
bool lspace_aligned(const SlopeSet& l1, const SlopeSet& l2);
/** The same condition written as h(interior L1) ∪ interior L2 = Q̂ with h(p/q) = q/p. */
bool lspace_aligned_by_union(const SlopeSet& l1, const SlopeSet& l2);
bool lspace_aligned(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2);

bool all_solid_torus_like(const std::vector<Loop>& loops);
/** Whether gluing the two sides (p/q on one side matching q/p on the other) gives an L-space. */
bool glue_is_lspace(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2);

} // namespace loopfloer
