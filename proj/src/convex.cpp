#include "geofrechet/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geofrechet {

namespace {

Point2 perp(Point2 v) { return {-v.y, v.x}; }

Point2 unit(Point2 v) {
    const double l = norm(v);
    return l > 0 ? (1.0 / l) * v : v;
}

struct Feature {
    int a, b;  // loop vertices; a == b for a vertex, otherwise edge (a, a+1)
    bool vertex() const { return a == b; }
};

struct Loop {
    const PolygonInstance& inst;
    int L, n, m;

    Point2 p(int k) const { return inst.loop[static_cast<std::size_t>(((k % L) + L) % L)]; }
    int wrap(int k) const { return ((k % L) + L) % L; }
    bool vertex_in_R(int k) const { return k <= n - 1; }
    bool vertex_in_B(int k) const { return k == 0 || k >= n - 1; }
    bool edge_in_R(int k) const { return k <= n - 2; }
    double r_param(int edge, double t) const { return edge + 1 + t; }
    double b_vertex(int k) const { return k == 0 ? 1.0 : k == n - 1 ? m : n + m - 1 - k; }
    double b_param(int edge, double t) const { return b_vertex(edge) - t; }
};

// Closest pair between segments [a0, a1] and [b0, b1]; returns local parameters.
std::pair<double, double> closest_params(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
    std::pair<double, double> best{0.0, 0.0};
    double bd = std::numeric_limits<double>::infinity();
    auto consider = [&](double s, double t) {
        const double d = dist(lerp(a0, a1, s), lerp(b0, b1, t));
        if (d < bd) {
            bd = d;
            best = {s, t};
        }
    };
    consider(0.0, closest_param_on_segment(a0, b0, b1));
    consider(1.0, closest_param_on_segment(a1, b0, b1));
    consider(closest_param_on_segment(b0, a0, a1), 0.0);
    consider(closest_param_on_segment(b1, a0, a1), 1.0);
    return best;
}

// Last parameter of c with h <= level scanning forward, interpolated on the next edge.
double exit_param(const std::vector<double>& h, double level) {
    const int k = static_cast<int>(h.size());
    int i = 1;
    for (int x = 1; x <= k; ++x)
        if (h[static_cast<std::size_t>(x - 1)] <= level) i = x;
    if (i == k) return k;
    const double lo = h[static_cast<std::size_t>(i - 1)], hi = h[static_cast<std::size_t>(i)];
    return i + std::clamp((level - lo) / (hi - lo), 0.0, 1.0);
}

// First parameter of c with h >= level, interpolated on the previous edge.
double entry_param(const std::vector<double>& h, double level) {
    const int k = static_cast<int>(h.size());
    int i = k;
    for (int x = k; x >= 1; --x)
        if (h[static_cast<std::size_t>(x - 1)] >= level) i = x;
    if (i == 1) return 1.0;
    const double lo = h[static_cast<std::size_t>(i - 2)], hi = h[static_cast<std::size_t>(i - 1)];
    return i - 1 + std::clamp((level - lo) / (hi - lo), 0.0, 1.0);
}

// Parameter in [x0, x1] where h reaches `level`, h increasing there.
double level_param(const std::vector<double>& h, double x0, double x1, double level) {
    const int lo = static_cast<int>(std::floor(x0)), hi = static_cast<int>(std::ceil(x1));
    for (int i = lo; i < hi; ++i) {
        const double a = h[static_cast<std::size_t>(i - 1)], b = h[static_cast<std::size_t>(i)];
        if (b >= level || i + 1 == hi) {
            const double t = b > a ? std::clamp((level - a) / (b - a), 0.0, 1.0) : 1.0;
            return std::clamp(i + t, x0, x1);
        }
    }
    return x1;
}

void push_point(MatchingPath& path, ParamPoint p) {
    if (!path.waypoints.empty()) {
        const ParamPoint q = path.waypoints.back();
        p.x = std::max(p.x, q.x);
        p.y = std::max(p.y, q.y);
        if (p == q) return;
    }
    path.waypoints.push_back(p);
}

}  // namespace

double euclidean_path_cost(const PolyCurve& R, const PolyCurve& B, const MatchingPath& path) {
    if (path.waypoints.empty()) return 0.0;
    auto at = [&](ParamPoint p) { return dist(eval(R, p.x), eval(B, p.y)); };
    double cost = at(path.waypoints.front());
    for (std::size_t k = 1; k < path.waypoints.size(); ++k) {
        const ParamPoint p = path.waypoints[k - 1], q = path.waypoints[k];
        std::vector<double> ts{1.0};
        auto crossings = [&](double u0, double u1) {
            if (u0 == u1) return;
            const double lo = std::min(u0, u1), hi = std::max(u0, u1);
            for (double v = std::floor(lo) + 1.0; v < hi; v += 1.0) ts.push_back((v - u0) / (u1 - u0));
        };
        crossings(p.x, q.x);
        crossings(p.y, q.y);
        for (double t : ts) cost = std::max(cost, at(t == 1.0 ? q : ParamPoint{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}));
    }
    return cost;
}

void check_convex(const PolygonInstance& inst) {
    const std::size_t L = inst.loop.size();
    for (std::size_t k = 0; k < L; ++k)
        if (orient(inst.loop[(k + L - 1) % L], inst.loop[k], inst.loop[(k + 1) % L]) > 0)
            throw Error(ErrorKind::not_convex, "polygon is not convex");
}

std::vector<TangentPair> tangent_pairs(const PolygonInstance& inst) {
    check_convex(inst);
    const Loop lp{inst, static_cast<int>(inst.loop.size()), inst.n(), inst.m()};
    const int L = lp.L;
    double scale = 0.0;
    for (const Point2& q : inst.loop) scale = std::max({scale, std::fabs(q.x), std::fabs(q.y)});

    // Distance from the supporting line of edge i, positive inside (loop is clockwise).
    auto w = [&](int i, int k) { return -cross(lp.p(i + 1) - lp.p(i), lp.p(k) - lp.p(i)); };
    auto tol = [&](int i) { return 1e-12 * norm(lp.p(i + 1) - lp.p(i)) * std::max(1.0, scale); };

    std::vector<int> far(static_cast<std::size_t>(L));
    int j = 0;
    for (int k = 1; k < L; ++k)
        if (w(0, k) > w(0, j)) j = k;
    std::vector<std::pair<Feature, Feature>> feats;
    std::vector<Point2> dirs;
    for (int i = 0; i < L; ++i) {
        for (int guard = 0; guard < L && w(i, j + 1) > w(i, j) + tol(i); ++guard) j = lp.wrap(j + 1);
        far[static_cast<std::size_t>(i)] = j;
        const bool parallel = std::fabs(w(i, j + 1) - w(i, j)) <= tol(i);
        feats.push_back({{i, i + 1}, parallel ? Feature{j, j + 1} : Feature{j, j}});
        dirs.push_back(lp.p(i + 1) - lp.p(i));
    }
    for (int i = 0; i < L; ++i) {
        const int from = far[static_cast<std::size_t>(lp.wrap(i - 1))], to = far[static_cast<std::size_t>(i)];
        for (int k = from, guard = 0; guard <= L; k = lp.wrap(k + 1), ++guard) {
            feats.push_back({{i, i}, {k, k}});
            dirs.push_back(k == from ? lp.p(i) - lp.p(i - 1) : lp.p(k - 1) - lp.p(k));
            if (k == to) break;
        }
    }

    auto in_R = [&](const Feature& f) { return f.vertex() ? lp.vertex_in_R(lp.wrap(f.a)) : lp.edge_in_R(lp.wrap(f.a)); };
    auto in_B = [&](const Feature& f) { return f.vertex() ? lp.vertex_in_B(lp.wrap(f.a)) : !lp.edge_in_R(lp.wrap(f.a)); };

    std::vector<TangentPair> out;
    for (std::size_t k = 0; k < feats.size(); ++k) {
        for (int swap = 0; swap < 2; ++swap) {
            const Feature fr = swap ? feats[k].second : feats[k].first;
            const Feature fb = swap ? feats[k].first : feats[k].second;
            if (!in_R(fr) || !in_B(fb)) continue;
            const auto [s, t] = closest_params(lp.p(fr.a), lp.p(fr.b), lp.p(fb.a), lp.p(fb.b));
            TangentPair tp;
            tp.r_star = lerp(lp.p(fr.a), lp.p(fr.b), s);
            tp.b_star = lerp(lp.p(fb.a), lp.p(fb.b), t);
            if (dist(tp.r_star, tp.b_star) <= 1e-12 * std::max(1.0, scale)) continue;
            const int ra = lp.wrap(fr.a), ba = lp.wrap(fb.a);
            tp.r_param = fr.vertex() ? ra + 1.0 : lp.r_param(ra, s);
            tp.b_param = fb.vertex() ? lp.b_vertex(ba) : lp.b_param(ba, t);
            tp.direction = unit(dirs[k]);
            out.push_back(tp);
        }
    }
    std::sort(out.begin(), out.end(), [](const TangentPair& a, const TangentPair& b) {
        if (a.r_param != b.r_param) return a.r_param < b.r_param;
        return a.b_param > b.b_param;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TangentPair& a, const TangentPair& b) {
                              return a.r_param == b.r_param && a.b_param == b.b_param;
                          }),
              out.end());
    return out;
}

ParallelMatching parallel_matching(const PolyCurve& R, const PolyCurve& B, Point2 chord) {
    const int n = R.size(), m = B.size();
    ParallelMatching pm;
    pm.chord = unit(chord);
    const Point2 d = pm.chord;
    std::vector<double> hr, hb;
    for (const Point2& q : R.vertices) hr.push_back(cross(d, q));
    for (const Point2& q : B.vertices) hb.push_back(cross(d, q));
    double hs = hr.front(), ht = hr.back();
    if (ht < hs) {
        for (double& v : hr) v = -v;
        for (double& v : hb) v = -v;
        hs = -hs;
        ht = -ht;
    }

    MatchingPath& path = pm.path;
    if (!(ht > hs)) {
        // Chord parallel to the segment between the shared endpoints.
        path.waypoints = {{1, 1}, {1, double(m)}, {double(n), double(m)}};
        if (n == 1) path.waypoints.pop_back();
        pm.fan1_end = {1, double(m)};
        pm.fan2_start = pm.fan1_end;
        pm.cost = pm.fan1_cost = euclidean_path_cost(R, B, path);
        return pm;
    }

    const double xr0 = exit_param(hr, hs), yb0 = exit_param(hb, hs);
    const double xr1 = std::max(xr0, entry_param(hr, ht)), yb1 = std::max(yb0, entry_param(hb, ht));

    push_point(path, {1, 1});
    push_point(path, {xr0, 1});
    push_point(path, {xr0, yb0});
    pm.fan1_end = path.waypoints.back();
    const std::size_t fan1_size = path.waypoints.size();

    std::vector<double> levels{hs, ht};
    for (int i = static_cast<int>(std::ceil(xr0)); i <= static_cast<int>(std::floor(xr1)); ++i)
        levels.push_back(hr[static_cast<std::size_t>(i - 1)]);
    for (int j = static_cast<int>(std::ceil(yb0)); j <= static_cast<int>(std::floor(yb1)); ++j)
        levels.push_back(hb[static_cast<std::size_t>(j - 1)]);
    std::sort(levels.begin(), levels.end());
    for (double c : levels) {
        c = std::clamp(c, hs, ht);
        push_point(path, {level_param(hr, xr0, xr1, c), level_param(hb, yb0, yb1, c)});
    }
    push_point(path, {xr1, yb1});
    pm.fan2_start = path.waypoints.back();
    const std::size_t par_end = path.waypoints.size();
    push_point(path, {double(n), yb1});
    push_point(path, {double(n), double(m)});

    auto sub = [&](std::size_t a, std::size_t b) {
        MatchingPath s;
        s.waypoints.assign(path.waypoints.begin() + static_cast<std::ptrdiff_t>(a),
                           path.waypoints.begin() + static_cast<std::ptrdiff_t>(b));
        return euclidean_path_cost(R, B, s);
    };
    pm.fan1_cost = sub(0, fan1_size);
    pm.parallel_cost = sub(fan1_size - 1, par_end);
    pm.fan2_cost = sub(par_end - 1, path.waypoints.size());
    pm.cost = std::max({pm.fan1_cost, pm.parallel_cost, pm.fan2_cost});
    path.cost = pm.cost;
    return pm;
}

ParallelMatching parallel_matching_cost(const PolygonInstance& inst, const TangentPair& pair) {
    return parallel_matching(inst.R, inst.B, pair.r_star - pair.b_star);
}

MatchingPath convex_frechet(const PolygonInstance& inst) {
    const auto pairs = tangent_pairs(inst);
    ParallelMatching best;
    best.cost = std::numeric_limits<double>::infinity();
    for (const TangentPair& tp : pairs) {
        ParallelMatching pm = parallel_matching_cost(inst, tp);
        if (pm.cost < best.cost) best = std::move(pm);
    }
    if (pairs.empty()) best = parallel_matching(inst.R, inst.B, perp(inst.R.back() - inst.R.front()));
    return best.path;
}

}  // namespace geofrechet
