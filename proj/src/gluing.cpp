#include "loopfloer/gluing.hpp"

#include "loopfloer/detection.hpp"
#include "loopfloer/errors.hpp"

#include <algorithm>

namespace loopfloer {

bool lspace_aligned(const SlopeSet& l1, const SlopeSet& l2) {
    return l1.complement_of_interior().reciprocal().subset_of_interior(l2);
}

bool lspace_aligned_by_union(const SlopeSet& l1, const SlopeSet& l2) {
    return l2.complement_of_interior().subset_of_interior(l1.reciprocal());
}

bool lspace_aligned(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2) {
    return lspace_aligned(lspace_interval(loops1), lspace_interval(loops2));
}

bool all_solid_torus_like(const std::vector<Loop>& loops) {
    if (loops.empty()) return false;
    return std::all_of(loops.begin(), loops.end(),
                       [](const Loop& l) { return is_solid_torus_like(l); });
}

namespace {

bool glue_with_solid_torus(const std::vector<Loop>& solid, const std::vector<Loop>& other) {
    auto longitude = rational_longitude(solid.front());
    if (!longitude) throw DomainError("no_longitude", "solid torus side has no rational longitude");
    return is_lspace_slope(other, longitude->reciprocal());
}

} // namespace

bool glue_is_lspace(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2) {
    if (loops1.empty() || loops2.empty()) throw DomainError("empty_invariant", "no loops to glue");
    if (all_solid_torus_like(loops1)) return glue_with_solid_torus(loops1, loops2);
    if (all_solid_torus_like(loops2)) return glue_with_solid_torus(loops2, loops1);
    return lspace_aligned(loops1, loops2);
}

} // namespace loopfloer
