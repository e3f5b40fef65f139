#include "geofrechet/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace geofrechet {

namespace {

double loop_scale(const PolygonInstance& inst) {
    double lo_x = inst.loop[0].x, hi_x = lo_x, lo_y = inst.loop[0].y, hi_y = lo_y;
    for (const Point2& p : inst.loop) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    return std::max(1.0, std::hypot(hi_x - lo_x, hi_y - lo_y));
}

// Smallest signed distance from p to the three edge lines (positive inside).
double inset(const PolygonInstance& inst, const Triangle& t, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
        const Point2 a = inst.loop[t.v[k]], b = inst.loop[t.v[(k + 1) % 3]];
        const double len = dist(a, b);
        const double s = len > 0 ? cross(b - a, p - a) / len : 0.0;
        best = std::min(best, s);
    }
    return best;
}

std::vector<int> sleeve(const PolygonInstance& inst, int a, int b) {
    std::vector<int> up, down;
    while (inst.tree_depth[a] > inst.tree_depth[b]) {
        up.push_back(a);
        a = inst.tree_parent[a];
    }
    while (inst.tree_depth[b] > inst.tree_depth[a]) {
        down.push_back(b);
        b = inst.tree_parent[b];
    }
    while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = inst.tree_parent[a];
        b = inst.tree_parent[b];
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

// Portal crossed when leaving `from` towards its neighbour `to`: (left, right).
std::pair<Point2, Point2> portal(const PolygonInstance& inst, int from, int to) {
    const Triangle& t = inst.triangles[from];
    for (int k = 0; k < 3; ++k)
        if (t.nbr[k] == to) return {inst.loop[t.v[(k + 1) % 3]], inst.loop[t.v[k]]};
    throw Error(ErrorKind::invalid_input, "triangles are not adjacent");
}

bool turns(Point2 a, Point2 b, Point2 p, int sign) {
    const double c = cross(b - a, p - a);
    const double tol = 1e-12 * dist(a, b) * dist(a, p);
    return sign > 0 ? c > tol : c < -tol;
}

class Funnel {
public:
    explicit Funnel(Point2 s) : prefix{s}, left{s}, right{s}, dl{0.0}, dr{0.0} {}

    void add_left(Point2 p) { add(p, left, dl, right, dr, +1); }
    void add_right(Point2 p) { add(p, right, dr, left, dl, -1); }

    Point2 apex() const { return left.front(); }
    double apex_dist() const { return dl.front(); }

    std::vector<Point2> prefix;
    std::deque<Point2> left, right;
    std::deque<double> dl, dr;

private:
    // sign = +1 when `chain` is the left chain.
    void add(Point2 p, std::deque<Point2>& chain, std::deque<double>& dc,
             std::deque<Point2>& other, std::deque<double>& dother, int sign) {
        if (p == chain.back()) return;
        while (chain.size() >= 2 && !turns(chain[chain.size() - 2], chain.back(), p, sign)) {
            chain.pop_back();
            dc.pop_back();
        }
        if (chain.size() == 1) {
            while (other.size() >= 2 && turns(other[0], other[1], p, -sign)) {
                other.pop_front();
                dother.pop_front();
                prefix.push_back(other.front());
            }
            chain = {other.front()};
            dc = {dother.front()};
        }
        dc.push_back(dc.back() + dist(chain.back(), p));
        chain.push_back(p);
    }
};

Funnel run_funnel(const PolygonInstance& inst, Point2 s, int ts, int te) {
    Funnel f(s);
    const std::vector<int> path = sleeve(inst, ts, te);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const auto [l, r] = portal(inst, path[k], path[k + 1]);
        f.add_left(l);
        f.add_right(r);
    }
    return f;
}

double ray_param(Point2 p0, Point2 p1, Point2 qa, Point2 dir) {
    const Point2 d = p1 - p0;
    const double den = cross(d, dir);
    if (std::fabs(den) <= 1e-300) return std::numeric_limits<double>::quiet_NaN();
    return -cross(d, qa - p0) / den;
}

}  // namespace

int locate(const PolygonInstance& inst, Point2 p) {
    int best = -1;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < static_cast<int>(inst.triangles.size()); ++t) {
        const double v = inset(inst, inst.triangles[t], p);
        if (v > best_v) {
            best_v = v;
            best = t;
        }
    }
    if (best < 0 || best_v < -1e-9 * loop_scale(inst))
        throw Error(ErrorKind::outside_polygon, "point outside polygon");
    return best;
}

GeodesicPath shortest_path(const PolygonInstance& inst, Point2 p, Point2 q) {
    const int tp = locate(inst, p), tq = locate(inst, q);
    GeodesicPath out;
    if (p == q) {
        out.waypoints = {p};
        return out;
    }
    Funnel f = run_funnel(inst, p, tp, tq);
    if (q == f.apex()) {
        out.waypoints = f.prefix;
    } else {
        f.add_left(q);
        out.waypoints = f.prefix;
        out.waypoints.insert(out.waypoints.end(), f.left.begin() + 1, f.left.end());
    }
    for (std::size_t k = 1; k < out.waypoints.size(); ++k)
        out.length += dist(out.waypoints[k - 1], out.waypoints[k]);
    return out;
}

double geodesic_distance(const PolygonInstance& inst, Point2 p, Point2 q) {
    return shortest_path(inst, p, q).length;
}

const SegmentField::Piece& SegmentField::piece(double u) const {
    for (const Piece& pc : pieces)
        if (u <= pc.u1) return pc;
    return pieces.back();
}

double SegmentField::operator()(double u) const {
    const Piece& pc = piece(u);
    return pc.base + dist(pc.w, at(u));
}

std::pair<double, double> SegmentField::minimum(double u0, double u1) const {
    double best_u = u0, best_v = (*this)(u0);
    const Point2 dir = b - a;
    const double len2 = dot(dir, dir);
    for (const Piece& pc : pieces) {
        const double lo = std::max(u0, pc.u0), hi = std::min(u1, pc.u1);
        if (lo > hi) continue;
        double u = len2 > 0 ? dot(pc.w - a, dir) / len2 : lo;
        u = std::clamp(u, lo, hi);
        const double v = pc.base + dist(pc.w, at(u));
        if (v < best_v) {
            best_v = v;
            best_u = u;
        }
    }
    const double end_v = (*this)(u1);
    if (end_v < best_v) {
        best_v = end_v;
        best_u = u1;
    }
    return {best_u, best_v};
}

SegmentField segment_field(const PolygonInstance& inst, Point2 source, int edge, bool reverse) {
    const int L = static_cast<int>(inst.loop.size());
    const int te = inst.edge_triangle[edge];
    const Triangle& tri = inst.triangles[te];
    int k = 0;
    for (; k < 3; ++k) {
        const int u = tri.v[k], w = tri.v[(k + 1) % 3];
        if ((u == edge && w == (edge + 1) % L) || (w == edge && u == (edge + 1) % L)) break;
    }
    const int ia = tri.v[(k + 1) % 3];  // left when leaving through the edge
    const Point2 qa = inst.loop[ia];
    const Point2 qb = inst.loop[tri.v[k]];

    Funnel f = run_funnel(inst, source, locate(inst, source), te);
    f.add_left(qa);
    f.add_right(qb);

    const Point2 dir = qb - qa;
    const int kl = static_cast<int>(f.left.size()) - 1;
    const int kr = static_cast<int>(f.right.size()) - 1;
    std::vector<double> h(static_cast<std::size_t>(kl + 2), 0.0), g(static_cast<std::size_t>(kr + 2), 1.0);
    for (int t = kl - 1; t >= 1; --t) {
        double v = ray_param(f.left[t - 1], f.left[t], qa, dir);
        if (std::isnan(v)) v = h[t + 1];
        h[t] = std::clamp(v, h[t + 1], 1.0);
    }
    const double h1 = kl >= 1 ? h[1] : 0.0;
    for (int t = kr - 1; t >= 1; --t) {
        double v = ray_param(f.right[t - 1], f.right[t], qa, dir);
        if (std::isnan(v)) v = g[t + 1];
        g[t] = std::clamp(v, h1, g[t + 1]);
    }
    const double g1 = kr >= 1 ? std::max(g[1], h1) : 1.0;

    SegmentField field;
    field.a = qa;
    field.b = qb;
    auto push = [&](double u0, double u1, Point2 w, double base) {
        if (u1 > u0 || field.pieces.empty()) field.pieces.push_back({u0, u1, w, base});
    };
    for (int t = kl - 1; t >= 1; --t) push(h[t + 1], h[t], f.left[t], f.dl[t]);
    push(h1, g1, f.apex(), f.apex_dist());
    for (int t = 1; t <= kr - 1; ++t) push(g[t], g[t + 1], f.right[t], f.dr[t]);
    field.pieces.back().u1 = 1.0;

    const bool forward_is_left = (ia == edge);
    if (forward_is_left == reverse) {
        std::swap(field.a, field.b);
        std::reverse(field.pieces.begin(), field.pieces.end());
        for (auto& pc : field.pieces) {
            const double u0 = 1.0 - pc.u1, u1 = 1.0 - pc.u0;
            pc.u0 = u0;
            pc.u1 = u1;
        }
    }
    return field;
}

EdgeDistanceProfile edge_profile(const PolygonInstance& inst, Point2 source, CurveId curve, int i) {
    const int len = curve == CurveId::R ? inst.n() : inst.m();
    if (i < 1 || i >= len) throw Error(ErrorKind::out_of_range, "edge index out of range");
    const auto [e, rev] = curve == CurveId::R ? inst.boundary_edge_R(i) : inst.boundary_edge_B(i);
    EdgeDistanceProfile p;
    p.source = source;
    p.curve = curve;
    p.edge = i;
    p.field = segment_field(inst, source, e, rev);
    const auto [u, v] = p.field.minimum();
    p.min_param = i + u;
    p.min_value = v;
    return p;
}

std::vector<double> threshold_crossings(const EdgeDistanceProfile& profile, double delta) {
    std::vector<double> out;
    if (slacked(delta) < profile.min_value) return out;
    if (delta <= slacked(profile.min_value)) return {profile.min_param};
    const double lo = profile.edge, hi = profile.edge + 1.0, mid = profile.min_param;
    auto f = [&](double x) { return profile.at(x); };
    if (f(lo) > slacked(delta)) out.push_back(bisect_boundary(f, lo, mid, delta, false));
    if (f(hi) > slacked(delta)) {
        const double x = bisect_boundary(f, mid, hi, delta, true);
        if (out.empty() || x - out.back() > kParamTol) out.push_back(x);
    }
    return out;
}

Point2 ray_shoot(const PolygonInstance& inst, Point2 origin, Point2 direction) {
    const double dn = norm(direction);
    if (!(dn > 0)) throw Error(ErrorKind::invalid_input, "zero ray direction");
    const Point2 d = (1.0 / dn) * direction;
    const double tol = 1e-9 * loop_scale(inst);

    // Start in a triangle containing the origin into which the ray points.
    int cur = -1;
    double cur_score = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < static_cast<int>(inst.triangles.size()); ++t) {
        const Triangle& tri = inst.triangles[t];
        if (inset(inst, tri, origin) < -tol) continue;
        double score = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k) {
            const Point2 a = inst.loop[tri.v[k]], b = inst.loop[tri.v[(k + 1) % 3]];
            const Point2 e = b - a;
            const double len = norm(e);
            const double s = cross(e, origin - a) / len;
            if (s <= tol) score = std::min(score, cross(e, d) / len);
        }
        if (score > cur_score) {
            cur_score = score;
            cur = t;
        }
    }
    if (cur < 0) throw Error(ErrorKind::outside_polygon, "ray origin outside polygon");

    const int limit = 4 * static_cast<int>(inst.triangles.size()) + 8;
    int from = -1;
    for (int step = 0; step < limit; ++step) {
        const Triangle& tri = inst.triangles[cur];
        int exit_k = -1;
        double exit_t = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k) {
            if (tri.nbr[k] == from && from >= 0) continue;
            const Point2 a = inst.loop[tri.v[k]], b = inst.loop[tri.v[(k + 1) % 3]];
            const Point2 e = b - a;
            const double den = cross(e, d);
            if (den >= 0) continue;
            const double t = cross(e, a - origin) / den;
            if (t < exit_t) {
                exit_t = t;
                exit_k = k;
            }
        }
        if (exit_k < 0) break;
        const Point2 hit = origin + std::max(exit_t, 0.0) * d;
        if (tri.nbr[exit_k] < 0) return hit;
        from = cur;
        cur = tri.nbr[exit_k];
    }

    // Fallback: closest boundary crossing over all edges.
    const int L = static_cast<int>(inst.loop.size());
    double best = std::numeric_limits<double>::infinity();
    for (int e = 0; e < L; ++e) {
        const Point2 a = inst.loop[e], b = inst.loop[(e + 1) % L];
        const Point2 ab = b - a;
        const double den = cross(d, ab);
        if (std::fabs(den) < 1e-300) continue;
        const double t = cross(a - origin, ab) / den;
        const double s = cross(a - origin, d) / den;
        if (t > tol && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::min(best, t);
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::outside_polygon, "ray leaves polygon");
    return origin + best * d;
}

}  // namespace geofrechet
