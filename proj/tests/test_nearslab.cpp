#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "geofrechet/driver.hpp"
#include "geofrechet/generators.hpp"
#include "geofrechet/nearslab.hpp"
#include "geofrechet/oracle.hpp"

using namespace geofrechet;

namespace {

PolygonInstance rectangle() {
    return build_instance(PolyCurve({{0, 0}, {0, 1}, {3, 1}, {3, 0}}), PolyCurve({{0, 0}, {3, 0}}));
}

Fan interval(double lo, double hi) {
    Fan f;
    f.x_lo = lo;
    f.x_hi = hi;
    return f;
}

bool reachable(const PolygonInstance& inst, double x0, double x1, double y0, double y1, double delta) {
    return freespace_decide(*geodesic_model(inst, x0, x1, y0, y1), delta);
}

}  // namespace

TEST_CASE("transit exits on one segment") {
    const auto inst = rectangle();
    const Fan all = interval(1.0, 4.0);

    SUBCASE("closest point at an endpoint") {
        const auto t = transit_exits_on_segment(inst, 1, 1.5, all);
        CHECK(t.size() <= 2);
        for (const TransitPoint& p : t) CHECK(p.kind == TransitKind::vertex);
    }
    SUBCASE("interior minimum") {
        const auto t = transit_exits_on_segment(inst, 2, 1.5, all);
        REQUIRE(t.size() == 3);
        CHECK(t[0].p.x == 2.0);
        CHECK(t[1].p.x == doctest::Approx(2.5).epsilon(1e-9));
        CHECK(t[1].kind == TransitKind::locally_closest);
        CHECK(t[2].p.x == 3.0);
    }
    SUBCASE("segment outside the interval") {
        CHECK_THROWS_AS(transit_exits_on_segment(inst, 1, 1.5, interval(2.5, 3.5)), Error);
    }
    SUBCASE("exits are clipped to the interval") {
        const auto t = transit_exits_on_segment(inst, 2, 1.5, interval(2.2, 2.8));
        REQUIRE(t.size() == 1);
        CHECK(t[0].p.x == doctest::Approx(2.5));
    }
}

TEST_CASE("advance through a near slab") {
    const auto inst = rectangle();
    Slab slab;
    slab.y_lo = 1.0;
    slab.y_hi = 1.5;
    slab.exit = interval(1.5, 4.0);

    SUBCASE("entrance left of the exit interval") {
        const auto t = advance_near_slab(inst, slab, {{1.0, 1.0}, TransitKind::vertex}, 10.0);
        REQUIRE(t);
        CHECK(t->p.x == 2.0);
        CHECK(t->p.y == 1.5);
    }
    SUBCASE("entrance inside takes the next exit") {
        const auto t = advance_near_slab(inst, slab, {{2.2, 1.0}, TransitKind::vertex}, 10.0);
        REQUIRE(t);
        CHECK(t->p.x == doctest::Approx(2.5));
    }
    SUBCASE("entrance on an exit keeps it") {
        const auto t = advance_near_slab(inst, slab, {{3.0, 1.0}, TransitKind::vertex}, 10.0);
        REQUIRE(t);
        CHECK(t->p.x == 3.0);
    }
    SUBCASE("entrance right of the exit interval is stuck") {
        slab.exit = interval(1.5, 2.5);
        CHECK_FALSE(advance_near_slab(inst, slab, {{3.0, 1.0}, TransitKind::vertex}, 10.0));
    }
    SUBCASE("far slabs are rejected") {
        slab.kind = SlabKind::far;
        CHECK_THROWS_AS(advance_near_slab(inst, slab, {{1.0, 1.0}, TransitKind::vertex}, 10.0), Error);
    }
}

TEST_CASE("near-slab exit is leftmost among reachable transit exits") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        const CurvePair cp = seed % 2 ? gen_star(9 + static_cast<int>(seed % 7), seed) : gen_pocket(11, seed);
        const auto inst = build_instance(cp.R, cp.B);
        const Prepared prep = prepare(inst);
        for (double f : {1.0, 1.4, 2.0}) {
            const double delta = prep.hausdorff * f;
            const SlabPartition part = build_slabs(inst, prep.profile, delta);
            const Slab& slab = part.slabs.front();
            if (slab.kind != SlabKind::near || slab.y_hi <= slab.y_lo) continue;
            const TransitPoint start{{1.0, 1.0}, TransitKind::vertex};
            const auto got = advance_near_slab(inst, slab, start, delta);
            double best = std::numeric_limits<double>::infinity();
            for (const TransitPoint& t : transit_exits(inst, slab.y_hi, slab.exit))
                if (reachable(inst, 1.0, t.p.x, 1.0, slab.y_hi, delta)) best = std::min(best, t.p.x);
            if (!std::isfinite(best)) continue;
            REQUIRE(got);
            CHECK(got->p.x <= best + 1e-9);
            CHECK(reachable(inst, 1.0, got->p.x, 1.0, slab.y_hi, slacked(delta)));
            ++checked;
        }
    }
    CHECK(checked >= 20);
}
