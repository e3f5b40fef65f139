#include "geofrechet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace geofrechet {

namespace {

std::vector<double> sorted_angles(int total, std::mt19937_64& rng) {
    const double two_pi = 2.0 * std::numbers::pi;
    std::uniform_real_distribution<double> jitter(-0.35, 0.35);
    std::vector<double> a(static_cast<std::size_t>(total));
    for (int k = 0; k < total; ++k) a[k] = two_pi * (k + 0.5 + jitter(rng)) / total;
    return a;
}

CurvePair split_loop(const std::vector<Point2>& loop, std::mt19937_64& rng) {
    const int L = static_cast<int>(loop.size());
    std::uniform_int_distribution<int> pick(1, L - 1);
    const int b = pick(rng);
    CurvePair out;
    for (int k = 0; k <= b; ++k) out.R.vertices.push_back(loop[k]);
    out.B.vertices.push_back(loop[0]);
    for (int k = L - 1; k >= b; --k) out.B.vertices.push_back(loop[k]);
    return out;
}

}  // namespace

CurvePair gen_convex(int total, std::uint64_t seed) {
    total = std::max(total, 3);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> axis(0.4, 1.0), rot(0.0, std::numbers::pi);
    const double ax = 1.0, ay = axis(rng), th = rot(rng);
    std::vector<Point2> loop;
    for (double a : sorted_angles(total, rng)) {
        const double x = ax * std::cos(a), y = ay * std::sin(a);
        loop.push_back({x * std::cos(th) - y * std::sin(th), x * std::sin(th) + y * std::cos(th)});
    }
    return split_loop(loop, rng);
}

CurvePair gen_star(int total, std::uint64_t seed) {
    total = std::max(total, 3);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.3, 1.0);
    std::vector<Point2> loop;
    for (double a : sorted_angles(total, rng)) {
        const double r = radius(rng);
        loop.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return split_loop(loop, rng);
}

CurvePair gen_pocket(int total, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const int top = std::max(1, total - 8);
    const double width = 4.0;
    CurvePair out;
    out.R.vertices.push_back({0.0, 0.0});
    out.R.vertices.push_back({0.0, 1.0});
    for (int k = 1; k <= top; ++k) {
        const double x = width * (k - 0.5 + 0.6 * (u01(rng) - 0.5)) / top;
        out.R.vertices.push_back({x, 0.85 + 0.3 * u01(rng)});
    }
    out.R.vertices.push_back({width, 1.0});
    out.R.vertices.push_back({width, 0.0});

    const double x1 = 0.8 + 2.0 * u01(rng);
    const double w = 0.15 + 0.25 * u01(rng);
    const double depth = 1.0 + 1.5 * u01(rng);
    const double skew = 0.4 * (u01(rng) - 0.5);
    out.B.vertices = {{0.0, 0.0}, {x1, 0.0}, {x1 + skew, -depth}, {x1 + skew + w, -depth}, {x1 + w, 0.0},
                      {width, 0.0}};
    return out;
}

Values1D gen_random1d(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.1, 10.0);
    Values1D out;
    for (int i = 0; i < n; ++i) out.R.push_back(-mag(rng));
    for (int j = 0; j < m; ++j) out.B.push_back(mag(rng));
    return out;
}

Values1D gen_comb1d(int n, int m) {
    Values1D out;
    for (int i = 0; i < n; ++i) out.R.push_back(-(1.0 + (i % 2 ? 3.0 : 0.0) + static_cast<double>(n - i) / n));
    for (int j = 0; j < m; ++j) out.B.push_back(1.0 + (j % 2 ? 3.0 : 0.0) + static_cast<double>(m - j) / m);
    return out;
}

}  // namespace geofrechet
