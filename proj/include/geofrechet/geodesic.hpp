#pragma once

#include <optional>
#include <vector>

#include "geofrechet/geometry.hpp"

namespace geofrechet {

/// Relative slack applied to every comparison against a threshold δ.
inline constexpr double kSlack = 1e-12;
/// Bisection tolerance on curve parameters.
inline constexpr double kParamTol = 1e-10;

inline double slacked(double delta) { return delta * (1.0 + kSlack) + 1e-12; }

struct GeodesicPath {
    std::vector<Point2> waypoints;
    double length = 0.0;
};

/// Index of a triangle containing p; throws when p is outside the polygon.
int locate(const PolygonInstance& inst, Point2 p);

GeodesicPath shortest_path(const PolygonInstance& inst, Point2 p, Point2 q);
double geodesic_distance(const PolygonInstance& inst, Point2 p, Point2 q);

/// Geodesic distance from a fixed source to the points a + u (b - a),
/// u in [0, 1], of a boundary edge, as a piecewise function: on each piece
/// the shortest path ends with a straight segment from vertex `w`.
struct SegmentField {
    struct Piece {
        double u0 = 0.0, u1 = 1.0;
        Point2 w;
        double base = 0.0;  // geodesic distance from the source to w
    };
    Point2 a, b;
    std::vector<Piece> pieces;

    double operator()(double u) const;
    Point2 at(double u) const { return lerp(a, b, u); }
    /// Tangent vertex of the shortest path to the point at u.
    const Piece& piece(double u) const;
    /// Minimum over [u0, u1] (closed form per piece).
    std::pair<double, double> minimum(double u0 = 0.0, double u1 = 1.0) const;
};

/// Field from `source` to boundary edge `edge` traversed from loop vertex
/// `edge` to `edge + 1`, or backwards when `reverse` is set.
SegmentField segment_field(const PolygonInstance& inst, Point2 source, int edge, bool reverse);

enum class CurveId { R, B };

/// Distance profile from a source point to edge [i, i+1] of R or B.
struct EdgeDistanceProfile {
    Point2 source;
    CurveId curve = CurveId::R;
    int edge = 1;
    double min_param = 1.0;  // curve parameter of the locally closest point
    double min_value = 0.0;
    SegmentField field;

    double at(double x) const { return field(x - edge); }
};

EdgeDistanceProfile edge_profile(const PolygonInstance& inst, Point2 source, CurveId curve, int i);

/// First boundary point hit by the ray origin + t·direction, t > 0.
Point2 ray_shoot(const PolygonInstance& inst, Point2 origin, Point2 direction);

/// Curve parameters on the profile's edge where the distance equals δ:
/// at most one on each monotone side of the minimum. A side whose edge end
/// stays within δ contributes nothing.
std::vector<double> threshold_crossings(const EdgeDistanceProfile& profile, double delta);

/// Last parameter in [lo, hi] (or first, when `last` is false) with
/// f <= δ, assuming {f <= δ} ∩ [lo, hi] is an interval containing the
/// starting end. Bisection to kParamTol.
template <class F>
double bisect_boundary(F&& f, double lo, double hi, double delta, bool last) {
    const double lim = slacked(delta);
    double in = last ? lo : hi, out = last ? hi : lo;
    if (f(out) <= lim) return out;
    while (std::abs(out - in) > kParamTol) {
        const double mid = 0.5 * (in + out);
        if (f(mid) <= lim) in = mid; else out = mid;
    }
    return in;
}

}  // namespace geofrechet
