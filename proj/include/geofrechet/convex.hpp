#pragma once

#include <vector>

#include "geofrechet/geometry.hpp"

namespace geofrechet {

/// Parallel supporting lines of P, one touching R at r_star and one touching
/// B at b_star, where (r_star, b_star) is a closest pair of the touched parts.
struct TangentPair {
    Point2 r_star, b_star;
    double r_param = 1.0, b_param = 1.0;
    Point2 direction;  // unit vector along the supporting lines
};

/// Fan / parallel / fan matching whose parallel part pairs points on lines
/// parallel to `chord`.
struct ParallelMatching {
    Point2 chord;
    ParamPoint fan1_end, fan2_start;  // parameter points bounding the parallel part
    double fan1_cost = 0.0, parallel_cost = 0.0, fan2_cost = 0.0, cost = 0.0;
    MatchingPath path;
};

/// Throws not_convex unless the loop of the instance turns one way only.
void check_convex(const PolygonInstance& inst);

/// Antipodal pairs from rotating calipers, ordered by r_param ascending and
/// b_param descending.
std::vector<TangentPair> tangent_pairs(const PolygonInstance& inst);

/// Maximally-parallel matching for the chord direction through the pair.
ParallelMatching parallel_matching_cost(const PolygonInstance& inst, const TangentPair& pair);
ParallelMatching parallel_matching(const PolyCurve& R, const PolyCurve& B, Point2 chord);

MatchingPath convex_frechet(const PolygonInstance& inst);

/// Maximum Euclidean distance of matched points along a piecewise-linear
/// path in parameter space.
double euclidean_path_cost(const PolyCurve& R, const PolyCurve& B, const MatchingPath& path);

}  // namespace geofrechet
