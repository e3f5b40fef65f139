#include <doctest.h>

#include <cmath>
#include <random>

#include "geofrechet/generators.hpp"
#include "geofrechet/geometry.hpp"

using namespace geofrechet;

namespace {

double triangle_area_sum(const PolygonInstance& inst) {
    double s = 0.0;
    for (const Triangle& t : inst.triangles)
        s += std::fabs(signed_area({inst.loop[t.v[0]], inst.loop[t.v[1]], inst.loop[t.v[2]]}));
    return s;
}

}  // namespace

TEST_CASE("unit square splits into two triangles") {
    const auto inst = build_instance(PolyCurve({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), PolyCurve({{0, 0}, {1, 0}}));
    CHECK(inst.triangles.size() == 2);
    CHECK_FALSE(inst.swapped);
    CHECK(triangle_area_sum(inst) == doctest::Approx(1.0));
}

TEST_CASE("triangle instance and orientation normalization") {
    const auto inst = build_instance(PolyCurve({{0, 0}, {1, 1}}), PolyCurve({{0, 0}, {1, 0}, {1, 1}}));
    CHECK(inst.triangles.size() == 1);
    CHECK_FALSE(inst.swapped);
    CHECK(inst.n() == 2);
    CHECK(signed_area(inst.loop) < 0);
    const auto flipped = build_instance(PolyCurve({{0, 0}, {1, 0}, {1, 1}}), PolyCurve({{0, 0}, {1, 1}}));
    CHECK(flipped.swapped);
    CHECK(flipped.n() == 2);
    CHECK(signed_area(flipped.loop) < 0);
}

TEST_CASE("validation errors") {
    auto kind_of = [](PolyCurve R, PolyCurve B) {
        try {
            build_instance(std::move(R), std::move(B));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::invalid_input;
    };
    CHECK(kind_of(PolyCurve({{0, 0}, {1, 0}}), PolyCurve({{0, 0}, {2, 0}})) == ErrorKind::endpoint_mismatch);
    CHECK(kind_of(PolyCurve({{0, 0}, {2, 2}, {2, 0}, {0, 2}, {3, 3}}), PolyCurve({{0, 0}, {3, 0}, {3, 3}})) ==
          ErrorKind::self_intersection);
    CHECK(kind_of(PolyCurve({{0, 0}, {1, 2}, {2, 0}}), PolyCurve({{0, 0}, {1, 3}, {1, -1}, {2, 0}})) == ErrorKind::curves_cross);
    CHECK(kind_of(PolyCurve({{0, 0}, {1, 0}, {2, 0}}), PolyCurve({{0, 0}, {2, 0}})) == ErrorKind::degenerate);
}

TEST_CASE("duplicate vertices merge") {
    const auto inst =
        build_instance(PolyCurve({{0, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 0}}), PolyCurve({{0, 0}, {0, 0}, {1, 0}}));
    CHECK(inst.n() == 4);
    CHECK(inst.m() == 2);
}

TEST_CASE("eval and subcurve") {
    const PolyCurve c({{0, 0}, {2, 0}, {2, 2}});
    CHECK(eval(PolyCurve({{0, 0}, {2, 0}}), 1.5) == Point2{1, 0});
    CHECK(eval(c, 1) == c.front());
    CHECK(eval(c, 3) == c.back());
    CHECK_THROWS_AS(eval(c, 3.5), Error);
    const PolyCurve s = subcurve(c, 1.5, 2.5);
    REQUIRE(s.size() == 3);
    CHECK(s[1] == Point2{1, 0});
    CHECK(s[2] == Point2{2, 0});
    CHECK(s[3] == Point2{2, 1});
    CHECK(subcurve(c, 2, 2).size() == 1);
    CHECK(subcurve(c, 1, 3).vertices == c.vertices);
    CHECK_THROWS_AS(subcurve(c, 2.5, 1.5), Error);
}

TEST_CASE("subcurve parameter change is equivalent") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const PolyCurve c({{0, 0}, {1, 0.5}, {2, -1}, {3, 4}, {5, 5}, {6, 0}});
    for (int trial = 0; trial < 200; ++trial) {
        double a = 1 + 5 * u(rng), b = 1 + 5 * u(rng);
        if (a > b) std::swap(a, b);
        const SubcurveMap map(a, b);
        const PolyCurve s = subcurve(c, a, b);
        for (int k = 0; k < 20; ++k) {
            const double v = 1 + (s.size() - 1) * u(rng);
            const Point2 p = eval(s, v), q = eval(c, map.to_parent(v));
            CHECK(dist(p, q) < 1e-12);
            if (s.size() > 1) CHECK(std::fabs(map.from_parent(map.to_parent(v)) - v) < 1e-9);
        }
    }
}

TEST_CASE("triangulation covers the polygon") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto cp = gen_star(5 + static_cast<int>(seed % 20), seed);
        const auto inst = build_instance(cp.R, cp.B);
        CHECK(inst.triangles.size() == inst.loop.size() - 2);
        CHECK(triangle_area_sum(inst) == doctest::Approx(inst.area()).epsilon(1e-9));
        for (const Triangle& t : inst.triangles)
            CHECK(orient(inst.loop[t.v[0]], inst.loop[t.v[1]], inst.loop[t.v[2]]) > 0);
    }
}

TEST_CASE("orientation is invariant under rotation") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const Point2 c = trial % 2 ? lerp(a, b, u(rng)) : Point2{u(rng), u(rng)};
        const int o = orient(a, b, c);
        CHECK(orient(b, c, a) == o);
        CHECK(orient(c, a, b) == o);
        CHECK(orient(b, a, c) == -o);
    }
}

TEST_CASE("endpoint-split curves generate valid instances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK_NOTHROW(build_instance(gen_convex(4 + static_cast<int>(seed), seed).R,
                                     gen_convex(4 + static_cast<int>(seed), seed).B));
        const auto p = gen_pocket(12, seed);
        CHECK_NOTHROW(build_instance(p.R, p.B));
    }
}
