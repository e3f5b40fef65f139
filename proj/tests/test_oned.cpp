#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <ostream>
#include <set>
#include <string>

#include "geofrechet/generators.hpp"
#include "geofrechet/oned.hpp"
#include "geofrechet/oracle.hpp"

using namespace geofrechet;

namespace geofrechet {
inline std::ostream& operator<<(std::ostream& os, const GridPoint& g) { return os << "(" << g.i << "," << g.j << ")"; }
}  // namespace geofrechet

template <>
struct doctest::StringMaker<std::optional<GridPoint>> {
    static doctest::String convert(const std::optional<GridPoint>& g) {
        if (!g) return "none";
        return ("(" + std::to_string(g->i) + "," + std::to_string(g->j) + ")").c_str();
    }
};

namespace {

Curve1D left(std::vector<double> v) { return Curve1D(std::move(v), Side::left); }
Curve1D right(std::vector<double> v) { return Curve1D(std::move(v), Side::right); }

std::pair<Curve1D, Curve1D> random_pair(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> len(1, max_n);
    const Values1D v = gen_random1d(len(rng), len(rng), rng());
    return {left(v.R), right(v.B)};
}

// Integer-valued curves force exact ties.
std::pair<Curve1D, Curve1D> tied_pair(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> len(1, max_n), val(1, 4);
    std::vector<double> r(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
    for (double& x : r) x = -val(rng);
    for (double& x : b) x = val(rng);
    return {left(r), right(b)};
}

// Greedy step by linear scans over the definitions.
std::optional<GridPoint> replay_step(const Curve1D& r, const Curve1D& b, GridPoint p, bool horizontal, double delta) {
    const Curve1D& a = horizontal ? r : b;
    const Curve1D& c = horizontal ? b : r;
    const int ia = horizontal ? p.i : p.j, ic = horizontal ? p.j : p.i;
    auto make = [&](int x, int y) { return horizontal ? GridPoint{x, y} : GridPoint{y, x}; };

    int best = ia;
    for (int x = ia + 1; x <= a.size() && a.mag(x) + c.mag(ic) <= delta; ++x)
        if (a.closer(x, best)) best = x;
    if (best != ia) return make(best, ic);

    int next = 0;
    for (int x = ia + 1; x <= a.size() && !next; ++x)
        if (a.closer(x, ia)) next = x;
    int bound = c.size();
    if (next) {
        double need = 0.0;
        for (int x = ia; x <= next; ++x) need = std::max(need, a.mag(x));
        for (int y = ic + 1; y <= c.size(); ++y)
            if (c.mag(y) <= delta - need) {
                bound = y;
                break;
            }
    }
    best = ic;
    for (int y = ic + 1; y <= bound && a.mag(ia) + c.mag(y) <= delta; ++y)
        if (c.closer(y, best)) best = y;
    if (best != ic) return make(ia, best);
    return std::nullopt;
}

std::string show(const Curve1D& c) {
    std::string s;
    for (double v : c.values()) s += std::to_string(v) + " ";
    return s;
}

double pair_quantile(const Curve1D& r, const Curve1D& b, double q) {
    std::vector<double> s;
    for (int i = 1; i <= r.size(); ++i)
        for (int j = 1; j <= b.size(); ++j) s.push_back(r.mag(i) + b.mag(j));
    std::sort(s.begin(), s.end());
    return s[static_cast<std::size_t>(q * static_cast<double>(s.size() - 1))];
}

std::vector<GridPoint> random_free_points(const Curve1D& r, const Curve1D& b, double delta, int count,
                                          std::mt19937_64& rng) {
    std::vector<GridPoint> free;
    for (int i = 1; i <= r.size(); ++i)
        for (int j = 1; j <= b.size(); ++j)
            if (r.mag(i) + b.mag(j) <= delta) free.push_back({i, j});
    std::vector<GridPoint> out;
    if (free.empty()) return out;
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    for (int k = 0; k < count; ++k) out.push_back(free[pick(rng)]);
    return out;
}

}  // namespace

TEST_CASE("prefix and suffix minima") {
    CHECK(prefix_minima(left({-5, -3, -4, -2, -1})) == std::vector<int>{1, 2, 4, 5});
    CHECK(prefix_minima(left({-4, -3, -2, -1})) == std::vector<int>{1, 2, 3, 4});
    CHECK(prefix_minima(left({-4})) == std::vector<int>{1});
    CHECK(suffix_minima(right({1, 3, 2, 5})) == std::vector<int>{1, 3, 4});
    CHECK(prefix_minima(left({-2, -2, -1})) == std::vector<int>{1, 3});
    CHECK(suffix_minima(left({-1, -2, -2})) == std::vector<int>{1, 2, 3});
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(left({-1, 2}), Error);
    CHECK_THROWS_AS(right({}), Error);
    CHECK_THROWS_AS(right({0.0}), Error);
    CHECK_NOTHROW(Curve1D({0.0, 1.0}, Side::right, true));
    const auto c = left({-1, -2, -3}).reversed();
    CHECK(c.value(1) == -3);
    CHECK(c.rank(1) == 3);
    CHECK(c.mag_at(1.5) == doctest::Approx(2.5));
}

TEST_CASE("closest pair") {
    const auto g = closest_pair_1d(left({-3, -1}), right({2, 5}));
    CHECK(g == GridPoint{2, 1});
    CHECK(closest_pair_1d(left({-1, -1}), right({2, 2})) == GridPoint{1, 1});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto [r, b] = random_pair(rng, 20);
        GridPoint best{1, 1};
        for (int i = 1; i <= r.size(); ++i)
            for (int j = 1; j <= b.size(); ++j) {
                const double d = r.mag(i) + b.mag(j), e = r.mag(best.i) + b.mag(best.j);
                if (d < e) best = {i, j};
            }
        CHECK(closest_pair_1d(r, b) == best);
    }
}

TEST_CASE("1D matching examples") {
    CHECK(frechet_matching_1d(left({-1}), right({2, 5, 2})).cost == 6.0);
    CHECK(frechet_matching_1d(left({-2, -1}), right({1, 3})).cost == 4.0);
    const auto p = frechet_matching_1d(left({-2, -1}), right({1, 3}));
    CHECK(is_bimonotone(p));
    CHECK(p.waypoints.front() == ParamPoint{1, 1});
    CHECK(p.waypoints.back() == ParamPoint{2, 2});
}

TEST_CASE("1D matching equals the free-space oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        auto [r, b] = t % 3 == 2 ? tied_pair(rng, 10) : random_pair(rng, 12);
        const auto path = frechet_matching_1d(r, b);
        const double oracle = frechet_bisect(*oned_model(r, b), 1e-12);
        CHECK(std::fabs(path.cost - oracle) <= 1e-9);
        CHECK(std::fabs(path_cost_1d(r, b, path) - path.cost) <= 1e-12);
        CHECK(is_bimonotone(path));
        CHECK(path.waypoints.front() == ParamPoint{1, 1});
        CHECK(path.waypoints.back() == ParamPoint{double(r.size()), double(b.size())});
        const auto rev = frechet_matching_1d(r.reversed(), b.reversed());
        CHECK(std::fabs(rev.cost - path.cost) <= 1e-12);
        CHECK(freespace_decide(r, b, path.cost));
    }
}

TEST_CASE("matching visits prefix minima up to the closest pair") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto [r, b] = random_pair(rng, 15);
        const auto pr = prefix_minima(r), pb = prefix_minima(b);
        const std::set<int> sr(pr.begin(), pr.end()), sb(pb.begin(), pb.end());
        const GridPoint cp = closest_pair_1d(r, b);
        for (const ParamPoint& w : frechet_matching_1d(r, b).waypoints) {
            if (w.x > cp.i || w.y > cp.j) break;
            CHECK(sr.count(int(w.x)) == 1);
            CHECK(sb.count(int(w.y)) == 1);
        }
    }
}

TEST_CASE("curve index answers equal linear scans") {
    const auto inc = left({-1, -2, -3, -4});
    const CurveIndex ii(inc);
    CHECK(ii.last_below(1, 10.0) == 4);
    for (int i = 1; i <= 4; ++i) CHECK(ii.next_smaller(i) == 0);

    std::mt19937_64 rng(3);
    int queries = 0;
    while (queries < 100000) {
        const auto [r, b] = tied_pair(rng, 40);
        (void)b;
        const CurveIndex ix(r);
        const int k = r.size();
        std::uniform_int_distribution<int> pos(1, k);
        std::uniform_real_distribution<double> thr(0.0, 5.0);
        for (int q = 0; q < 200; ++q, ++queries) {
            int a = pos(rng), c = pos(rng);
            if (a > c) std::swap(a, c);
            const double U = q % 2 ? std::round(thr(rng)) : thr(rng);
            int last = a - 1;
            while (last < k && r.mag(last + 1) <= U) ++last;
            if (r.mag(a) > U) last = a - 1;
            CHECK(ix.last_below(a, U) == last);
            double mn = r.mag(a), mx = mn;
            int arg = a, first = 0, lastin = 0;
            for (int x = a; x <= c; ++x) {
                mn = std::min(mn, r.mag(x));
                mx = std::max(mx, r.mag(x));
                if (r.closer(x, arg)) arg = x;
                if (r.mag(x) <= U) {
                    if (!first) first = x;
                    lastin = x;
                }
            }
            CHECK(ix.range_min(a, c) == mn);
            CHECK(ix.range_max(a, c) == mx);
            CHECK(ix.range_argmin(a, c) == arg);
            CHECK(ix.first_below(a, c, U) == first);
            CHECK(ix.last_below_in_range(a, c, U) == lastin);
            int ns = 0;
            for (int x = a + 1; x <= k && !ns; ++x)
                if (r.closer(x, a)) ns = x;
            CHECK(ix.next_smaller(a) == ns);
        }
    }
    CHECK_THROWS_AS(CurveIndex(inc).range_min(0, 2), Error);
}

TEST_CASE("greedy steps equal the definition replay") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const auto [r, b] = t % 2 ? tied_pair(rng, 15) : random_pair(rng, 15);
        const double delta = pair_quantile(r, b, 0.6);
        const GreedyStepper st(r, b, delta);
        for (const GridPoint& p : random_free_points(r, b, delta, 10, rng)) {
            INFO("r=", show(r), " b=", show(b), " p=", p, " delta=", delta);
            CHECK(st.step(p, Orientation::horizontal) == replay_step(r, b, p, true, delta));
            CHECK(st.step(p, Orientation::vertical) == replay_step(r, b, p, false, delta));
            const auto rr = r.reversed(), br = b.reversed();
            const GridPoint q{r.size() + 1 - p.i, b.size() + 1 - p.j};
            auto back = [&](std::optional<GridPoint> g) -> std::optional<GridPoint> {
                if (!g) return g;
                return GridPoint{r.size() + 1 - g->i, b.size() + 1 - g->j};
            };
            CHECK(st.step(p, Orientation::reverse_horizontal) == back(replay_step(rr, br, q, true, delta)));
            CHECK(st.step(p, Orientation::reverse_vertical) == back(replay_step(rr, br, q, false, delta)));
        }
    }
    const auto r = left({-3, -2, -1}), b = right({1, 2});
    CHECK(greedy_step(r, b, {1, 1}, Orientation::horizontal, 100.0) == GridPoint{3, 1});
    CHECK(greedy_step(left({-3, -1, -4, -0.5}), b, {1, 1}, Orientation::horizontal, 4.5) == GridPoint{2, 1});
    CHECK_FALSE(greedy_step(r, b, {3, 2}, Orientation::horizontal, 3.0).has_value());
    CHECK_THROWS_AS(greedy_step(r, b, {1, 2}, Orientation::horizontal, 1.0), Error);
}

TEST_CASE("greedy forests") {
    const auto r = left({-3, -2, -1}), b = right({3, 2, 1});
    const auto f = build_greedy_forest(r, b, 100.0, {{1, 1}}, Orientation::horizontal, false);
    CHECK(f.vertices.back().x == 3.0);
    CHECK(f.seed_vertex.size() == 1);

    const auto g = build_greedy_forest(r, b, 100.0, {{1, 1}, {2, 1}}, Orientation::horizontal, false);
    CHECK(g.seed_vertex.size() == 2);
    int roots = 0;
    for (int p : g.parent) roots += p < 0;
    CHECK(roots == 1);
    CHECK_THROWS_AS(build_greedy_forest(r, b, 1.0, {{1, 1}}, Orientation::horizontal, false), Error);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto [r2, b2] = t % 2 ? tied_pair(rng, 15) : random_pair(rng, 15);
        const double delta = pair_quantile(r2, b2, 0.5);
        const auto seeds = random_free_points(r2, b2, delta, 8, rng);
        if (seeds.empty()) continue;
        for (auto o : {Orientation::horizontal, Orientation::vertical, Orientation::reverse_horizontal,
                       Orientation::reverse_vertical}) {
            const GreedyStepper st(r2, b2, delta);
            const auto forest = build_greedy_forest(st, seeds, o, true);
            CHECK(static_cast<int>(forest.vertices.size()) <= 10 * (r2.size() + b2.size()));
            for (std::size_t s = 0; s < seeds.size(); ++s) {
                // Following parents from the seed visits the simulated path in order.
                std::vector<GridPoint> sim{seeds[s]};
                while (auto nx = st.step(sim.back(), o)) sim.push_back(*nx);
                std::vector<ParamPoint> walk;
                for (int v = forest.seed_vertex[s]; v >= 0; v = forest.parent[static_cast<std::size_t>(v)])
                    if (!forest.is_extension[static_cast<std::size_t>(v)]) walk.push_back(forest.vertices[static_cast<std::size_t>(v)]);
                std::size_t k = 0;
                for (const ParamPoint& w : walk)
                    if (k < sim.size() && w == ParamPoint{double(sim[k].i), double(sim[k].j)}) ++k;
                CHECK(k == sim.size());
            }
        }
    }
}

TEST_CASE("bichromatic intersections equal pairwise checks") {
    auto touch = [](const AxisSegment& p, const AxisSegment& q) {
        return p.a.x <= q.b.x && q.a.x <= p.b.x && p.a.y <= q.b.y && q.a.y <= p.b.y;
    };
    {
        const auto [hr, hb] = bichromatic_intersections({{{0, 0}, {2, 0}}}, {{{1, -1}, {1, 1}}});
        CHECK(hr == std::vector<bool>{true});
        CHECK(hb == std::vector<bool>{true});
        const auto [dr, db] = bichromatic_intersections({{{0, 0}, {1, 0}}}, {{{3, 3}, {3, 4}}});
        CHECK(dr == std::vector<bool>{false});
        CHECK(db == std::vector<bool>{false});
    }
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> c(0, 30);
    auto seg = [&]() {
        const int x = c(rng), y = c(rng), l = c(rng) / 3;
        if (rng() % 2) return AxisSegment{{double(x), double(y)}, {double(x + l), double(y)}};
        return AxisSegment{{double(x), double(y)}, {double(x), double(y + l)}};
    };
    for (int t = 0; t < 20; ++t) {
        std::vector<AxisSegment> red(500), blue(500);
        for (auto& s : red) s = seg();
        for (auto& s : blue) s = seg();
        const auto [hr, hb] = bichromatic_intersections(red, blue);
        for (std::size_t a = 0; a < red.size(); ++a) {
            bool any = false;
            for (const auto& q : blue) any = any || touch(red[a], q);
            CHECK(hr[a] == any);
        }
        for (std::size_t a = 0; a < blue.size(); ++a) {
            bool any = false;
            for (const auto& q : red) any = any || touch(blue[a], q);
            CHECK(hb[a] == any);
        }
    }
}

TEST_CASE("propagation examples") {
    const auto r = left({-3, -1, -2}), b = right({2, 1, 3});
    const std::vector<GridPoint> S{{1, 1}}, E{{1, 1}, {2, 2}, {3, 3}, {3, 1}};
    CHECK(propagate_reachability(r, b, 100.0, S, E) == E);
    CHECK(propagate_reachability(r, b, 100.0, {{2, 2}}, E) == std::vector<GridPoint>{{2, 2}, {3, 3}});
    CHECK(propagate_reachability(r, b, 5.0, {{2, 2}}, {{2, 2}}) == std::vector<GridPoint>{{2, 2}});
    CHECK_THROWS_AS(propagate_reachability(r, b, 2.5, {{1, 1}}, {{2, 2}}), Error);
}

TEST_CASE("propagation equals brute-force reachability") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 400; ++t) {
        const auto [r, b] = t % 3 == 2 ? tied_pair(rng, 15) : random_pair(rng, 15);
        const double delta = pair_quantile(r, b, std::uniform_real_distribution<double>(0.3, 0.9)(rng));
        std::uniform_int_distribution<int> cnt(1, 10);
        const auto S = random_free_points(r, b, delta, cnt(rng), rng);
        const auto E = random_free_points(r, b, delta, cnt(rng), rng);
        if (S.empty()) continue;
        CHECK(propagate_reachability(r, b, delta, S, E) == reachable_points_bruteforce(r, b, delta, S, E));
    }
}
