#pragma once

#include <vector>

#include "geofrechet/geodesic.hpp"
#include "geofrechet/geometry.hpp"

namespace geofrechet {

/// Closest point of one curve to a fixed point.
struct NearestPoint {
    double param = 1.0;
    double value = 0.0;
    int edge = 1;
};

/// Closest point of curve `target` to p, over all its edges. Ties go to the
/// lower edge index.
NearestPoint nearest_on(const PolygonInstance& inst, Point2 p, CurveId target);

/// Parameter x on R where the nearest neighbour on B jumps from y_before
/// to y_after.
struct NNBreak {
    double x = 1.0;
    double y_before = 1.0;
    double y_after = 1.0;
};

struct NNProfile {
    std::vector<NNBreak> breakpoints;  // ordered by x
    /// Every x where the closest B edge changes, including continuous
    /// hand-overs through a shared vertex.
    std::vector<double> switches;
    double max_value = 0.0;  // max over R of the distance to B
};

/// Nearest-neighbour profile of the points of `source` onto the other
/// curve, as the lower envelope of the per-edge distance functions.
NNProfile nn_profile(const PolygonInstance& inst, CurveId source = CurveId::R);

struct Fan {
    double apex_y = 1.0;
    Point2 apex;
    double seed_x = 1.0;
    double x_lo = 1.0, x_hi = 1.0;  // leaf R[x_lo, x_hi]
};

/// Maximal subcurve of R around seed_x within geodesic distance δ of apex.
/// Throws invalid_input when R(seed_x) itself is farther than δ.
Fan fan_leaf(const PolygonInstance& inst, Point2 apex, double seed_x, double delta);

enum class SlabKind { near, far };

struct Slab {
    SlabKind kind = SlabKind::near;
    double y_lo = 1.0, y_hi = 1.0;
    Fan entrance, exit;
};

struct SlabPartition {
    std::vector<Slab> slabs;  // bottom to top
    bool empty_fan_leaf = false;
};

SlabPartition build_slabs(const PolygonInstance& inst, const NNProfile& profile, double delta);

}  // namespace geofrechet
