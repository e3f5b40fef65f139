#pragma once

#include <cstdint>
#include <vector>

#include "geofrechet/geometry.hpp"

namespace geofrechet {

struct CurvePair {
    PolyCurve R;
    PolyCurve B;
};

struct Values1D {
    std::vector<double> R;  // all negative
    std::vector<double> B;  // all positive
};

/// Convex polygon with `total` vertices on a random ellipse, split at two vertices.
CurvePair gen_convex(int total, std::uint64_t seed);

/// Random star-shaped polygon with `total` vertices, split at two vertices.
CurvePair gen_star(int total, std::uint64_t seed);

/// Strip with a deep notch in B whose interior is far from R.
CurvePair gen_pocket(int total, std::uint64_t seed);

/// Separated 1D curves with n and m vertices, magnitudes in [0.1, 10].
Values1D gen_random1d(int n, int m, std::uint64_t seed);

/// Alternating high/low teeth drifting towards 0.
Values1D gen_comb1d(int n, int m);

}  // namespace geofrechet
