#pragma once

#include <optional>
#include <vector>

#include "geofrechet/geometry.hpp"
#include "geofrechet/nnprofile.hpp"

namespace geofrechet {

/// `column` marks the fallback exit straight above an entrance that has no
/// transit exit to its right.
enum class TransitKind { vertex, locally_closest, column };

struct TransitPoint {
    ParamPoint p;
    TransitKind kind = TransitKind::vertex;
};

/// Transit exits on [i, i+1] x {y} inside the exit interval, left to right.
/// Throws out_of_range when the segment misses the interval.
std::vector<TransitPoint> transit_exits_on_segment(const PolygonInstance& inst, int i, double y, const Fan& exit);

/// All transit exits of the interval, left to right.
std::vector<TransitPoint> transit_exits(const PolygonInstance& inst, double y, const Fan& exit);

/// Leftmost transit exit of a near slab at or right of the entrance, or
/// nullopt when the exit interval lies entirely left of the entrance.
std::optional<TransitPoint> advance_near_slab(const PolygonInstance& inst, const Slab& slab,
                                              const TransitPoint& entrance, double delta);

}  // namespace geofrechet
