#include "geofrechet/farslab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>

namespace geofrechet {

namespace {

constexpr double kDedup = 1e-12;

double scale_of(const PolygonInstance& inst) {
    double lo_x = inst.loop[0].x, hi_x = lo_x, lo_y = inst.loop[0].y, hi_y = lo_y;
    for (const Point2& p : inst.loop) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    return std::max(1.0, std::hypot(hi_x - lo_x, hi_y - lo_y));
}

const PolyCurve& curve_of(const PolygonInstance& inst, CurveId c) { return c == CurveId::R ? inst.R : inst.B; }

void dedup(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return b - a <= kDedup; }), v.end());
}

void dedup(std::vector<ParamPoint>& v) {
    std::sort(v.begin(), v.end(), [](const ParamPoint& a, const ParamPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const ParamPoint& a, const ParamPoint& b) {
                            return std::fabs(a.x - b.x) <= kDedup && std::fabs(a.y - b.y) <= kDedup;
                        }),
            v.end());
}

// lo, the integers strictly between, hi.
std::vector<double> range_vertices(double lo, double hi) {
    std::vector<double> out{lo};
    for (double k = std::floor(lo) + 1.0; k < hi; k += 1.0) out.push_back(k);
    if (hi > lo) out.push_back(hi);
    return out;
}

// Distances from one anchor to the curves, with per-edge fields built on demand.
class AnchorFields {
public:
    AnchorFields(const PolygonInstance& inst, Point2 a)
        : inst_(&inst), a_(a), fr_(static_cast<std::size_t>(std::max(0, inst.n() - 1))),
          fb_(static_cast<std::size_t>(std::max(0, inst.m() - 1))) {}

    Point2 anchor() const { return a_; }

    const SegmentField& field(CurveId c, int i) {
        auto& slot = (c == CurveId::R ? fr_ : fb_)[static_cast<std::size_t>(i - 1)];
        if (!slot) {
            const auto [e, rev] = c == CurveId::R ? inst_->boundary_edge_R(i) : inst_->boundary_edge_B(i);
            slot = std::make_unique<SegmentField>(segment_field(*inst_, a_, e, rev));
        }
        return *slot;
    }

    double dist(CurveId c, double x) {
        const PolyCurve& curve = curve_of(*inst_, c);
        const int len = curve.size();
        if (len < 2) return geodesic_distance(*inst_, a_, curve[1]);
        const int i = std::clamp(static_cast<int>(std::floor(x)), 1, len - 1);
        return field(c, i)(std::clamp(x - i, 0.0, 1.0));
    }

    // Parameter of the minimum of each edge piece inside [lo, hi].
    std::vector<double> minima(CurveId c, double lo, double hi) {
        std::vector<double> out;
        const int len = curve_of(*inst_, c).size();
        if (len < 2) return out;
        const int first = std::clamp(static_cast<int>(std::floor(lo)), 1, len - 1);
        const int last = std::clamp(static_cast<int>(std::ceil(hi)) - 1, 1, len - 1);
        for (int i = first; i <= last; ++i) {
            const double u0 = std::clamp(lo - i, 0.0, 1.0), u1 = std::clamp(hi - i, 0.0, 1.0);
            if (u0 > u1 || (u0 == u1 && hi > lo)) continue;
            out.push_back(i + field(c, i).minimum(u0, u1).first);
        }
        return out;
    }

private:
    const PolygonInstance* inst_;
    Point2 a_;
    std::vector<std::unique_ptr<SegmentField>> fr_, fb_;
};

SnappedCurves make_snapped(AnchorFields& af, const FarRange& range, std::vector<double> xs, std::vector<double> ys) {
    for (double x : range_vertices(range.x0, range.x1)) xs.push_back(x);
    for (double x : af.minima(CurveId::R, range.x0, range.x1)) xs.push_back(x);
    for (double y : range_vertices(range.y0, range.y1)) ys.push_back(y);
    for (double y : af.minima(CurveId::B, range.y0, range.y1)) ys.push_back(y);
    for (double& x : xs) x = std::clamp(x, range.x0, range.x1);
    for (double& y : ys) y = std::clamp(y, range.y0, range.y1);
    dedup(xs);
    dedup(ys);
    std::vector<double> rv, bv;
    for (double x : xs) rv.push_back(-af.dist(CurveId::R, x));
    for (double y : ys) bv.push_back(af.dist(CurveId::B, y));
    return SnappedCurves{Curve1D(rv, Side::left, true), Curve1D(bv, Side::right, true), xs, ys};
}

int nearest_index(const std::vector<double>& v, double x) {
    const auto it = std::lower_bound(v.begin(), v.end(), x);
    std::size_t k = static_cast<std::size_t>(it - v.begin());
    if (k == v.size()) --k;
    else if (k > 0 && x - v[k - 1] < v[k] - x) --k;
    return static_cast<int>(k) + 1;
}

class FarSolver {
public:
    FarSolver(const PolygonInstance& inst, double y0, double y1, const AnchorSet& anchors, double delta, double eps)
        : inst_(inst), y0_(y0), y1_(y1), anchors_(anchors), delta_(delta), eps_(eps), tol_(1e-8 * scale_of(inst)) {
        for (const Point2& a : anchors.anchors) fields_.push_back(std::make_unique<AnchorFields>(inst, a));
        cache_.resize(anchors.anchors.size());
    }

    std::vector<ParamPoint> gates(int k, double x0, double x1) {
        if (k == 0) return {{x0, y0_}};
        Cache& c = cache_[static_cast<std::size_t>(k)];
        if (!c.done) fill(k, c);
        std::vector<ParamPoint> out;
        for (const std::vector<ParamPoint>* list : {&c.r_side, &c.b_side})
            for (const ParamPoint& g : *list)
                if (g.x >= x0 - kDedup && g.x <= x1 + kDedup) out.push_back({std::clamp(g.x, x0, x1), g.y});
        for (double x : {x0, x1})
            if (auto y = ray_gate(k, eval(inst_.R, x), CurveId::B, y0_, y1_)) out.push_back({x, *y});
        dedup(out);
        return out;
    }

    bool decide(double x0, double x1) {
        const int K = anchors_.K();
        const double thr = slacked((1.0 + eps_) * delta_);
        const FarRange range{x0, x1, y0_, y1_};
        std::vector<ParamPoint> cur{{x0, y0_}};
        for (int k = 0; k < K; ++k) {
            const std::vector<ParamPoint> next = k + 1 < K ? gates(k + 1, x0, x1) : std::vector<ParamPoint>{{x1, y1_}};
            if (next.empty()) return false;
            std::vector<double> xs, ys;
            for (const std::vector<ParamPoint>* list : {static_cast<const std::vector<ParamPoint>*>(&cur), &next})
                for (const ParamPoint& p : *list) {
                    xs.push_back(p.x);
                    ys.push_back(p.y);
                }
            const SnappedCurves sc = make_snapped(*fields_[static_cast<std::size_t>(k)], range, xs, ys);
            auto to_grid = [&](const std::vector<ParamPoint>& pts) {
                std::vector<GridPoint> g;
                for (const ParamPoint& p : pts) {
                    const GridPoint q = sc.grid(p);
                    if (sc.r.mag(q.i) + sc.b.mag(q.j) <= thr) g.push_back(q);
                }
                std::sort(g.begin(), g.end());
                g.erase(std::unique(g.begin(), g.end()), g.end());
                return g;
            };
            const std::vector<GridPoint> S = to_grid(cur), E = to_grid(next);
            if (S.empty() || E.empty()) return false;
            cur.clear();
            for (const GridPoint& q : propagate_reachability(sc.r, sc.b, thr, S, E))
                cur.push_back({sc.xs[static_cast<std::size_t>(q.i - 1)], sc.ys[static_cast<std::size_t>(q.j - 1)]});
            if (cur.empty()) return false;
        }
        return true;
    }

private:
    struct Cache {
        bool done = false;
        std::vector<ParamPoint> r_side, b_side;
    };

    void fill(int k, Cache& c) {
        AnchorFields& af = *fields_[static_cast<std::size_t>(k)];
        std::vector<double> xs = range_vertices(1.0, inst_.n());
        for (double x : af.minima(CurveId::R, 1.0, inst_.n())) xs.push_back(x);
        dedup(xs);
        for (double x : xs)
            if (auto y = ray_gate(k, eval(inst_.R, x), CurveId::B, y0_, y1_)) c.r_side.push_back({x, *y});
        std::vector<double> ys = range_vertices(y0_, y1_);
        for (double y : af.minima(CurveId::B, y0_, y1_)) ys.push_back(y);
        dedup(ys);
        for (double y : ys)
            if (auto x = ray_gate(k, eval(inst_.B, y), CurveId::R, 1.0, inst_.n())) c.b_side.push_back({*x, y});
        c.done = true;
    }

    // Extends the geodesic from `from` through anchor k until it meets the
    // boundary, and returns the parameter of the hit on curve `hit` in [lo, hi].
    std::optional<double> ray_gate(int k, Point2 from, CurveId hit, double lo, double hi) {
        const Point2 a = anchors_.anchors[static_cast<std::size_t>(k)];
        const GeodesicPath path = shortest_path(inst_, a, from);
        if (path.waypoints.size() < 2) return std::nullopt;
        const Point2 d = a - path.waypoints[1];
        if (!(norm(d) > tol_ * 1e-4)) return std::nullopt;
        Point2 q;
        try {
            q = ray_shoot(inst_, a, d);
        } catch (const Error&) {
            return std::nullopt;
        }
        const PolyCurve& c = curve_of(inst_, hit);
        if (c.size() < 2) return std::nullopt;
        const int first = std::clamp(static_cast<int>(std::floor(lo)), 1, c.size() - 1);
        const int last = std::clamp(static_cast<int>(std::ceil(hi)) - 1, 1, c.size() - 1);
        double best = std::numeric_limits<double>::infinity(), param = 0.0;
        for (int i = first; i <= last; ++i) {
            const double t = closest_param_on_segment(q, c[i], c[i + 1]);
            const double dd = dist(q, lerp(c[i], c[i + 1], t));
            if (dd < best) {
                best = dd;
                param = i + t;
            }
        }
        if (best > tol_ || param < lo - 1e-9 || param > hi + 1e-9) return std::nullopt;
        return std::clamp(param, lo, hi);
    }

    const PolygonInstance& inst_;
    double y0_, y1_;
    const AnchorSet& anchors_;
    double delta_, eps_, tol_;
    std::vector<std::unique_ptr<AnchorFields>> fields_;
    std::vector<Cache> cache_;
};

Point2 point_at_arc(const std::vector<Point2>& w, double s) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        const double len = dist(w[k - 1], w[k]);
        if (s <= len || k + 1 == w.size()) return len > 0 ? lerp(w[k - 1], w[k], std::clamp(s / len, 0.0, 1.0)) : w[k];
        s -= len;
    }
    return w.front();
}

}  // namespace

GridPoint SnappedCurves::grid(ParamPoint p) const { return {nearest_index(xs, p.x), nearest_index(ys, p.y)}; }

std::optional<AnchorSet> build_separator_anchors(const PolygonInstance& inst, Point2 b0, Point2 b1, double delta,
                                                 double eps) {
    AnchorSet out;
    out.separator = shortest_path(inst, b0, b1);
    const double len = out.separator.length;
    if (len > slacked(2.0 * delta)) return std::nullopt;
    const double step = eps * delta;
    const int K = len > 0 && step > 0 ? std::max(1, static_cast<int>(std::ceil(len / step))) : 1;

    const std::vector<Point2>& w = out.separator.waypoints;
    std::vector<double> bends;
    double acc = 0.0;
    for (std::size_t k = 1; k + 1 < w.size(); ++k) {
        acc += dist(w[k - 1], w[k]);
        bends.push_back(acc);
    }
    const double nudge = 1e-9 * len;
    auto on_vertex = [&](Point2 p) {
        for (const PolyCurve* c : {&inst.R, &inst.B})
            for (const Point2& v : c->vertices)
                if (dist(p, v) <= 1e-12 * (1.0 + len)) return true;
        return false;
    };
    for (int k = 0; k <= K; ++k) {
        double s = k == K ? len : len * k / K;
        if (k > 0 && k < K) {
            for (double b : bends)
                if (std::fabs(s - b) < nudge) s = b + nudge;
            if (on_vertex(point_at_arc(w, s))) s += nudge;
        }
        out.arc.push_back(s);
        out.anchors.push_back(k == 0 ? b0 : k == K ? b1 : point_at_arc(w, s));
    }
    return out;
}

std::optional<double> separator_crossing(const PolygonInstance& inst, const AnchorSet& anchors, Point2 p, Point2 q) {
    const std::vector<Point2> path = shortest_path(inst, p, q).waypoints;
    const std::vector<Point2>& sep = anchors.separator.waypoints;
    const double eps = 1e-12 * scale_of(inst);
    if (sep.size() == 1) {
        for (std::size_t t = 1; t < path.size(); ++t) {
            const Point2 a = path[t - 1], b = path[t];
            if (dist(lerp(a, b, closest_param_on_segment(sep[0], a, b)), sep[0]) <= eps) return 0.0;
        }
        return std::nullopt;
    }
    std::vector<double> arc{0.0};
    for (std::size_t k = 1; k < sep.size(); ++k) arc.push_back(arc.back() + dist(sep[k - 1], sep[k]));

    for (std::size_t t = 1; t < path.size(); ++t) {
        const Point2 a = path[t - 1], b = path[t], d = b - a;
        double best_t = std::numeric_limits<double>::infinity(), best_s = 0.0;
        for (std::size_t k = 1; k < sep.size(); ++k) {
            const Point2 c = sep[k - 1], e = sep[k] - sep[k - 1];
            const double len = norm(e);
            const double den = cross(d, e);
            if (std::fabs(den) > eps * (norm(d) + len)) {
                const double tt = cross(c - a, e) / den, ss = cross(c - a, d) / den;
                const double ttol = eps / std::max(norm(d), eps), stol = eps / std::max(len, eps);
                if (tt >= -ttol && tt <= 1.0 + ttol && ss >= -stol && ss <= 1.0 + stol && tt < best_t) {
                    best_t = tt;
                    best_s = arc[k - 1] + std::clamp(ss, 0.0, 1.0) * len;
                }
            } else if (std::fabs(cross(c - a, d)) <= eps * (norm(d) + 1.0) && len > 0) {
                // Collinear: first point of the overlap along the path.
                const double dd = dot(d, d);
                if (dd == 0) continue;
                const double u0 = dot(c - a, d) / dd, u1 = dot(sep[k] - a, d) / dd;
                const double lo = std::max(0.0, std::min(u0, u1)), hi = std::min(1.0, std::max(u0, u1));
                if (lo <= hi && lo < best_t) {
                    best_t = lo;
                    best_s = arc[k - 1] + std::clamp(dot(lerp(a, b, lo) - c, e) / (len * len), 0.0, 1.0) * len;
                }
            }
        }
        if (std::isfinite(best_t)) return best_s;
    }
    return std::nullopt;
}

int snap_anchor(const AnchorSet& anchors, double crossing) {
    const auto it = std::upper_bound(anchors.arc.begin(), anchors.arc.end(), crossing);
    const int k = static_cast<int>(it - anchors.arc.begin()) - 1;
    return std::clamp(k, 0, std::max(0, anchors.K() - 1));
}

std::vector<GateSet> build_gate_sets(const PolygonInstance& inst, const FarRange& range, const AnchorSet& anchors) {
    FarSolver solver(inst, range.y0, range.y1, anchors, 0.0, 0.0);
    std::vector<GateSet> out;
    for (int k = 0; k < std::max(1, anchors.K()); ++k) out.push_back({k, solver.gates(k, range.x0, range.x1)});
    return out;
}

SnappedCurves snapped_curves(const PolygonInstance& inst, const FarRange& range, Point2 anchor,
                             const std::vector<double>& extra_x, const std::vector<double>& extra_y) {
    AnchorFields af(inst, anchor);
    return make_snapped(af, range, extra_x, extra_y);
}

bool far_decide(const PolygonInstance& inst, const FarRange& range, double delta, double eps) {
    const auto anchors = build_separator_anchors(inst, eval(inst.B, range.y0), eval(inst.B, range.y1), delta, 0.5 * eps);
    if (!anchors) return false;
    FarSolver solver(inst, range.y0, range.y1, *anchors, delta, eps);
    return solver.decide(range.x0, range.x1);
}

std::optional<TransitPoint> far_find_exit(const PolygonInstance& inst, const Slab& slab, const TransitPoint& entrance,
                                          double delta, double eps, std::vector<FarRecord>* trace) {
    if (slab.kind != SlabKind::far) throw Error(ErrorKind::invalid_input, "far_find_exit on a near slab");
    const double x = entrance.p.x;
    const auto anchors = build_separator_anchors(inst, slab.entrance.apex, slab.exit.apex, delta, 0.5 * eps);
    if (!anchors) {
        if (trace) trace->push_back({{x, x, slab.y_lo, slab.y_hi}, delta, true, false});
        return std::nullopt;
    }
    if (x > slab.exit.x_hi + kParamTol) return std::nullopt;

    std::vector<TransitPoint> cand;
    for (const TransitPoint& t : transit_exits(inst, slab.y_hi, slab.exit))
        if (t.p.x >= x - 1e-12) cand.push_back(t);
    if (cand.empty()) cand.push_back({{std::clamp(x, slab.exit.x_lo, slab.exit.x_hi), slab.y_hi}, TransitKind::column});

    FarSolver solver(inst, slab.y_lo, slab.y_hi, *anchors, delta, eps);
    std::map<int, bool> memo;
    auto test = [&](int idx) {
        if (auto it = memo.find(idx); it != memo.end()) return it->second;
        const double x1 = std::max(x, cand[static_cast<std::size_t>(idx)].p.x);
        const bool ok = solver.decide(x, x1);
        if (trace) trace->push_back({{x, x1, slab.y_lo, slab.y_hi}, delta, false, ok});
        memo[idx] = ok;
        return ok;
    };

    const int count = static_cast<int>(cand.size());
    int no = -1, yes = -1;
    for (int step = 1, idx = 0;; step *= 2) {
        idx = std::min(idx, count - 1);
        if (test(idx)) {
            yes = idx;
            break;
        }
        no = idx;
        if (idx == count - 1) break;
        idx += step;
    }
    if (yes < 0) return std::nullopt;
    int lo = no + 1, hi = yes;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (test(mid)) hi = mid;
        else lo = mid + 1;
    }
    TransitPoint out = cand[static_cast<std::size_t>(hi)];
    out.p.x = std::max(out.p.x, x);
    return out;
}

}  // namespace geofrechet
