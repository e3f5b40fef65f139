#pragma once

#include <optional>
#include <vector>

#include "geofrechet/geodesic.hpp"
#include "geofrechet/geometry.hpp"
#include "geofrechet/nearslab.hpp"
#include "geofrechet/nnprofile.hpp"
#include "geofrechet/oned.hpp"

namespace geofrechet {

/// Separator geodesic between the endpoints of a far slab, discretized by
/// K+1 anchors at equal arc-length spacing.
struct AnchorSet {
    GeodesicPath separator;
    std::vector<Point2> anchors;
    std::vector<double> arc;  // arc length of each anchor along the separator
    int K() const { return static_cast<int>(anchors.size()) - 1; }
};

/// nullopt when the separator is longer than 2δ.
std::optional<AnchorSet> build_separator_anchors(const PolygonInstance& inst, Point2 b0, Point2 b1, double delta,
                                                 double eps);

/// Arc length along the separator where the geodesic p -> q first meets
/// it, or nullopt when it does not.
std::optional<double> separator_crossing(const PolygonInstance& inst, const AnchorSet& anchors, Point2 p, Point2 q);

/// Anchor index k with arc[k] <= crossing < arc[k+1] (the last anchor
/// interval is closed).
int snap_anchor(const AnchorSet& anchors, double crossing);

/// Subproblem R[x0, x1] x B[y0, y1], in parameters of the full curves.
struct FarRange {
    double x0 = 1.0, x1 = 1.0, y0 = 1.0, y1 = 1.0;
};

struct GateSet {
    int k = 0;
    std::vector<ParamPoint> points;
};

/// Gate sets for anchors 0..K-1; gate set 0 is the bottom-left corner.
std::vector<GateSet> build_gate_sets(const PolygonInstance& inst, const FarRange& range, const AnchorSet& anchors);

struct SnappedCurves {
    Curve1D r, b;               // -d(R(x), a) and d(B(y), a)
    std::vector<double> xs, ys;  // curve parameter of each 1D vertex
    GridPoint grid(ParamPoint p) const;
};

/// 1D curves holding the vertices of the subcurves, the per-edge minima of
/// the distance to the anchor, and the extra parameters.
SnappedCurves snapped_curves(const PolygonInstance& inst, const FarRange& range, Point2 anchor,
                             const std::vector<double>& extra_x = {}, const std::vector<double>& extra_y = {});

/// True means d_F(R[x0,x1], B[y0,y1]) <= (1+ε)δ; false means it exceeds δ.
/// Anchors are spaced εδ/2 apart, so snapping adds at most εδ to a path.
bool far_decide(const PolygonInstance& inst, const FarRange& range, double delta, double eps);

struct FarRecord {
    FarRange range;
    double delta = 0.0;
    bool too_long = false;
    bool answer = false;
};

/// Transit exit of a far slab reachable at (1+ε)δ and left of every exit
/// reachable at δ, or nullopt. Each decision call is appended to `trace`.
std::optional<TransitPoint> far_find_exit(const PolygonInstance& inst, const Slab& slab, const TransitPoint& entrance,
                                          double delta, double eps, std::vector<FarRecord>* trace = nullptr);

}  // namespace geofrechet
