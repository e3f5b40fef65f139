#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "geofrechet/geometry.hpp"

namespace testsupport {

using geofrechet::Point2;

// Even-odd test; points within 1e-9 of the boundary count as inside.
inline bool inside_polygon(const std::vector<Point2>& poly, Point2 p) {
    const std::size_t L = poly.size();
    for (std::size_t k = 0; k < L; ++k) {
        const Point2 a = poly[k], b = poly[(k + 1) % L];
        const double t = geofrechet::closest_param_on_segment(p, a, b);
        if (geofrechet::dist(p, geofrechet::lerp(a, b, t)) <= 1e-9) return true;
    }
    bool in = false;
    for (std::size_t k = 0, j = L - 1; k < L; j = k++) {
        const Point2 a = poly[k], b = poly[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
    }
    return in;
}

inline bool visible(const std::vector<Point2>& poly, Point2 u, Point2 v) {
    const std::size_t L = poly.size();
    for (std::size_t k = 0; k < L; ++k) {
        const Point2 a = poly[k], b = poly[(k + 1) % L];
        const double o1 = geofrechet::cross(v - u, a - u), o2 = geofrechet::cross(v - u, b - u);
        const double o3 = geofrechet::cross(b - a, u - a), o4 = geofrechet::cross(b - a, v - a);
        if (o1 * o2 < -1e-18 && o3 * o4 < -1e-18) return false;
    }
    for (int s = 1; s < 64; ++s)
        if (!inside_polygon(poly, geofrechet::lerp(u, v, s / 64.0))) return false;
    return true;
}

// Dijkstra over the visibility graph of p, q and the polygon vertices.
inline double visibility_distance(const std::vector<Point2>& poly, Point2 p, Point2 q) {
    std::vector<Point2> nodes{p, q};
    nodes.insert(nodes.end(), poly.begin(), poly.end());
    const std::size_t N = nodes.size();
    std::vector<double> d(N, std::numeric_limits<double>::infinity());
    std::vector<bool> done(N, false);
    d[0] = 0.0;
    for (std::size_t it = 0; it < N; ++it) {
        std::size_t u = N;
        for (std::size_t k = 0; k < N; ++k)
            if (!done[k] && (u == N || d[k] < d[u])) u = k;
        if (u == N || !std::isfinite(d[u])) break;
        done[u] = true;
        if (u == 1) break;
        for (std::size_t k = 0; k < N; ++k) {
            if (done[k]) continue;
            const double w = geofrechet::dist(nodes[u], nodes[k]);
            if (d[u] + w < d[k] && visible(poly, nodes[u], nodes[k])) d[k] = d[u] + w;
        }
    }
    return d[1];
}

}  // namespace testsupport
