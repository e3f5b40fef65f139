#include "geofrechet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <boost/multiprecision/cpp_int.hpp>

namespace geofrechet {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::endpoint_mismatch: return "endpoint mismatch";
        case ErrorKind::self_intersection: return "self-intersection";
        case ErrorKind::curves_cross: return "curves cross";
        case ErrorKind::degenerate: return "degenerate polygon";
        case ErrorKind::outside_polygon: return "point outside polygon";
        case ErrorKind::out_of_range: return "parameter out of range";
        case ErrorKind::invalid_input: return "invalid input";
        case ErrorKind::not_convex: return "polygon not convex";
    }
    return "error";
}

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }
double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
Point2 lerp(Point2 a, Point2 b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

namespace {

int exact_orient(Point2 a, Point2 b, Point2 c) {
    using boost::multiprecision::cpp_rational;
    cpp_rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    cpp_rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace

int orient(Point2 a, Point2 b, Point2 c) {
    const double l = (b.x - a.x) * (c.y - a.y);
    const double r = (b.y - a.y) * (c.x - a.x);
    const double det = l - r;
    const double bound = std::max(1e-12, 4e-16 * (std::fabs(l) + std::fabs(r)));
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return exact_orient(a, b, c);
}

namespace {

bool on_segment_collinear(Point2 a, Point2 b, Point2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment_collinear(a, b, c)) return true;
    if (o2 == 0 && on_segment_collinear(a, b, d)) return true;
    if (o3 == 0 && on_segment_collinear(c, d, a)) return true;
    if (o4 == 0 && on_segment_collinear(c, d, b)) return true;
    return false;
}

double closest_param_on_segment(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
}

Point2 eval(const PolyCurve& curve, double x) {
    const int n = curve.size();
    if (n == 0 || !(x >= 1.0) || !(x <= static_cast<double>(n)))
        throw Error(ErrorKind::out_of_range, "curve parameter out of range");
    const int i = std::min(static_cast<int>(std::floor(x)), n);
    if (i == n) return curve[n];
    const double t = x - i;
    if (t == 0.0) return curve[i];
    return lerp(curve[i], curve[i + 1], t);
}

PolyCurve subcurve(const PolyCurve& curve, double x, double x2) {
    if (x > x2) throw Error(ErrorKind::out_of_range, "reversed subcurve range");
    if (x < 1.0 || x2 > static_cast<double>(curve.size()))
        throw Error(ErrorKind::out_of_range, "subcurve range outside curve");
    SubcurveMap map(x, x2);
    std::vector<Point2> pts;
    pts.reserve(map.breaks.size());
    for (double b : map.breaks) pts.push_back(eval(curve, b));
    return PolyCurve(std::move(pts));
}

PolyCurve reversed(const PolyCurve& curve) {
    std::vector<Point2> v(curve.vertices.rbegin(), curve.vertices.rend());
    return PolyCurve(std::move(v));
}

double curve_length(const PolyCurve& curve) {
    double s = 0.0;
    for (int i = 1; i < curve.size(); ++i) s += dist(curve[i], curve[i + 1]);
    return s;
}

SubcurveMap::SubcurveMap(double x, double x2) {
    breaks.push_back(x);
    if (x2 > x) {
        for (double k = std::floor(x) + 1.0; k < x2; k += 1.0) breaks.push_back(k);
        breaks.push_back(x2);
    }
}

double SubcurveMap::to_parent(double u) const {
    const int k = size();
    if (k == 1) return breaks[0];
    u = std::clamp(u, 1.0, static_cast<double>(k));
    const int l = std::min(static_cast<int>(std::floor(u)), k - 1);
    const double t = u - l;
    return breaks[l - 1] + t * (breaks[l] - breaks[l - 1]);
}

double SubcurveMap::from_parent(double x) const {
    const int k = size();
    if (k == 1) return 1.0;
    if (x <= breaks.front()) return 1.0;
    if (x >= breaks.back()) return static_cast<double>(k);
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    const int l = static_cast<int>(it - breaks.begin());  // breaks[l-1] <= x < breaks[l]
    const double a = breaks[l - 1], b = breaks[l];
    return l + (x - a) / (b - a);
}

bool is_bimonotone(const MatchingPath& path, double tol) {
    for (std::size_t k = 1; k < path.waypoints.size(); ++k) {
        if (path.waypoints[k].x < path.waypoints[k - 1].x - tol) return false;
        if (path.waypoints[k].y < path.waypoints[k - 1].y - tol) return false;
    }
    return true;
}

double signed_area(const std::vector<Point2>& poly) {
    double s = 0.0;
    const std::size_t L = poly.size();
    for (std::size_t k = 0; k < L; ++k) s += cross(poly[k], poly[(k + 1) % L]);
    return 0.5 * s;
}

std::vector<std::array<int, 3>> ear_clip(const std::vector<Point2>& poly) {
    std::vector<std::array<int, 3>> out;
    std::vector<int> idx(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) idx[k] = static_cast<int>(k);

    auto is_ear = [&](std::size_t k) {
        const std::size_t L = idx.size();
        const int p = idx[(k + L - 1) % L], c = idx[k], q = idx[(k + 1) % L];
        if (orient(poly[p], poly[c], poly[q]) <= 0) return false;
        for (std::size_t t = 0; t < L; ++t) {
            const int o = idx[t];
            if (o == p || o == c || o == q) continue;
            const Point2 x = poly[o];
            if (x == poly[p] || x == poly[c] || x == poly[q]) continue;
            if (orient(poly[p], poly[c], x) >= 0 && orient(poly[c], poly[q], x) >= 0 &&
                orient(poly[q], poly[p], x) >= 0)
                return false;
        }
        return true;
    };

    while (idx.size() > 3) {
        const std::size_t L = idx.size();
        std::size_t pick = L;
        for (std::size_t k = 0; k < L; ++k) {
            if (is_ear(k)) {
                pick = k;
                break;
            }
        }
        if (pick == L) {
            // Numerically stuck: clip the most convex corner.
            double best = -1.0;
            for (std::size_t k = 0; k < L; ++k) {
                const Point2 a = poly[idx[(k + L - 1) % L]], b = poly[idx[k]], c = poly[idx[(k + 1) % L]];
                const double cr = cross(b - a, c - b);
                if (pick == L || cr > best) {
                    best = cr;
                    pick = k;
                }
            }
        }
        out.push_back({idx[(pick + L - 1) % L], idx[pick], idx[(pick + 1) % L]});
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (idx.size() == 3) out.push_back({idx[0], idx[1], idx[2]});
    return out;
}

int PolygonInstance::loop_index_R(int i) const {
    const int L = static_cast<int>(loop.size());
    return (i - 1) % L;
}

int PolygonInstance::loop_index_B(int j) const {
    const int L = static_cast<int>(loop.size());
    if (j == 1) return 0;
    if (j == m()) return (n() - 1) % L;
    return n() + (m() - 1 - j);
}

std::pair<int, bool> PolygonInstance::boundary_edge_R(int i) const {
    return {loop_index_R(i), false};
}

std::pair<int, bool> PolygonInstance::boundary_edge_B(int j) const {
    return {loop_index_B(j + 1), true};
}

double PolygonInstance::area() const { return std::fabs(signed_area(loop)); }

namespace {

std::vector<Point2> merge_duplicates(const std::vector<Point2>& v) {
    std::vector<Point2> out;
    for (const Point2& p : v) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(ErrorKind::invalid_input, "non-finite coordinate");
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    return out;
}

std::vector<Point2> make_loop(const PolyCurve& R, const PolyCurve& B) {
    std::vector<Point2> loop(R.vertices.begin(), R.vertices.end());
    for (int j = B.size() - 1; j >= 2; --j) loop.push_back(B[j]);
    if (B.size() == 1) loop.pop_back();  // R(n) coincides with R(1)
    return loop;
}

void check_simple(const std::vector<Point2>& loop, int n_R_edges) {
    const int L = static_cast<int>(loop.size());
    auto owner_is_R = [&](int e) { return e < n_R_edges; };
    auto fail = [&](int e1, int e2) {
        const bool r1 = owner_is_R(e1), r2 = owner_is_R(e2);
        if (r1 == r2) throw Error(ErrorKind::self_intersection, r1 ? "R self-intersects" : "B self-intersects");
        throw Error(ErrorKind::curves_cross, "curves R and B cross");
    };
    for (int e1 = 0; e1 < L; ++e1) {
        const Point2 a = loop[e1], b = loop[(e1 + 1) % L];
        for (int e2 = e1 + 1; e2 < L; ++e2) {
            const Point2 c = loop[e2], d = loop[(e2 + 1) % L];
            const bool adj_next = (e2 == e1 + 1);
            const bool adj_prev = ((e2 + 1) % L == e1);
            if (adj_next || adj_prev) {
                // Shared vertex; reject folding back onto the other edge.
                const Point2 s = adj_next ? b : a;
                const Point2 u = adj_next ? a : b;
                const Point2 w = adj_next ? d : c;
                if (orient(u, s, w) == 0 && dot(u - s, w - s) > 0) fail(e1, e2);
                continue;
            }
            if (segments_intersect(a, b, c, d)) fail(e1, e2);
        }
    }
}

}  // namespace

PolygonInstance build_instance(PolyCurve R, PolyCurve B) {
    if (R.size() == 0 || B.size() == 0) throw Error(ErrorKind::invalid_input, "empty curve");
    R = PolyCurve(merge_duplicates(R.vertices));
    B = PolyCurve(merge_duplicates(B.vertices));
    auto close = [](Point2 p, Point2 q) { return dist(p, q) <= 1e-12 * std::max(1.0, norm(p)); };
    if (!close(R.front(), B.front()) || !close(R.back(), B.back()))
        throw Error(ErrorKind::endpoint_mismatch, "curves must share both endpoints");
    B.vertices.front() = R.front();
    B.vertices.back() = R.back();
    if (R.size() == 1 && B.size() == 1) throw Error(ErrorKind::degenerate, "both curves are single points");

    PolygonInstance inst;
    inst.R = std::move(R);
    inst.B = std::move(B);
    inst.loop = make_loop(inst.R, inst.B);
    if (inst.loop.size() < 3) throw Error(ErrorKind::degenerate, "polygon has fewer than three vertices");

    double diam2 = 0.0;
    for (const Point2& p : inst.loop)
        for (const Point2& q : inst.loop) diam2 = std::max(diam2, dot(p - q, p - q));
    double spread = 0.0;
    for (const Point2& p : inst.loop)
        spread = std::max(spread, std::fabs(cross(inst.loop[1] - inst.loop[0], p - inst.loop[0])));
    if (spread <= 1e-12 * std::max(1.0, diam2)) throw Error(ErrorKind::degenerate, "collinear polygon");
    const int n_R_edges = std::max(0, inst.R.size() - 1);
    check_simple(inst.loop, n_R_edges);
    const double a = signed_area(inst.loop);
    if (std::fabs(a) <= 1e-12 * std::max(1.0, diam2)) throw Error(ErrorKind::degenerate, "zero-area polygon");
    if (a > 0) {
        std::swap(inst.R, inst.B);
        inst.swapped = true;
        inst.loop = make_loop(inst.R, inst.B);
    }

    const int L = static_cast<int>(inst.loop.size());
    std::vector<Point2> ccw(inst.loop.rbegin(), inst.loop.rend());
    for (const auto& t : ear_clip(ccw)) {
        Triangle tri;
        for (int k = 0; k < 3; ++k) tri.v[k] = L - 1 - t[k];
        tri.nbr = {-1, -1, -1};
        inst.triangles.push_back(tri);
    }

    std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;
    inst.edge_triangle.assign(static_cast<std::size_t>(L), -1);
    for (int t = 0; t < static_cast<int>(inst.triangles.size()); ++t) {
        Triangle& tri = inst.triangles[t];
        for (int k = 0; k < 3; ++k) {
            const int u = tri.v[k], w = tri.v[(k + 1) % 3];
            const auto key = std::minmax(u, w);
            auto it = edge_owner.find(key);
            if (it == edge_owner.end()) {
                edge_owner.emplace(key, std::make_pair(t, k));
            } else {
                tri.nbr[k] = it->second.first;
                inst.triangles[it->second.first].nbr[it->second.second] = t;
            }
            if ((u + 1) % L == w || (w + 1) % L == u) {
                const int e = ((u + 1) % L == w) ? u : w;
                inst.edge_triangle[e] = t;
            }
        }
    }

    const int T = static_cast<int>(inst.triangles.size());
    inst.tree_parent.assign(static_cast<std::size_t>(T), -1);
    inst.tree_depth.assign(static_cast<std::size_t>(T), -1);
    if (T > 0) {
        std::deque<int> q{0};
        inst.tree_depth[0] = 0;
        while (!q.empty()) {
            const int t = q.front();
            q.pop_front();
            for (int nb : inst.triangles[t].nbr) {
                if (nb >= 0 && inst.tree_depth[nb] < 0) {
                    inst.tree_depth[nb] = inst.tree_depth[t] + 1;
                    inst.tree_parent[nb] = t;
                    q.push_back(nb);
                }
            }
        }
    }
    return inst;
}

}  // namespace geofrechet
