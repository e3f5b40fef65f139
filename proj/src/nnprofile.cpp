#include "geofrechet/nnprofile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geofrechet {

namespace {

constexpr int kSamplesPerEdge = 16;
constexpr double kJump = 1e-6;
constexpr double kHandover = 1e-4;

bool below(double v, double best) { return std::isinf(best) ? v < best : v < best - 1e-12 * (1.0 + best); }

class Envelope {
public:
    Envelope(const PolygonInstance& inst, CurveId source)
        : inst_(inst),
          src_(source == CurveId::R ? inst.R : inst.B),
          target_(source == CurveId::R ? CurveId::B : CurveId::R),
          edges_((source == CurveId::R ? inst.m() : inst.n()) - 1) {}

    EdgeDistanceProfile edge(double x, int j) const { return edge_profile(inst_, eval(src_, x), target_, j); }

    NearestPoint all(double x) const { return nearest_on(inst_, eval(src_, x), target_); }

    void run(NNProfile& out) {
        const int len = src_.size();
        if (edges_ < 1 || len < 2) {
            for (int i = 1; i <= len; ++i) track(out, all(i).value);
            return;
        }
        NearestPoint prev = all(1.0);
        double px = 1.0;
        track(out, prev.value);
        for (int i = 1; i < len; ++i)
            for (int s = 1; s <= kSamplesPerEdge; ++s) {
                const double x = s == kSamplesPerEdge ? i + 1.0 : i + static_cast<double>(s) / kSamplesPerEdge;
                const NearestPoint cur = all(x);
                track(out, cur.value);
                if (cur.edge != prev.edge) refine(out, px, prev.edge, x, cur.edge, 0);
                prev = cur;
                px = x;
            }
        std::sort(out.switches.begin(), out.switches.end());
        std::sort(out.breakpoints.begin(), out.breakpoints.end(),
                  [](const NNBreak& a, const NNBreak& b) { return a.x < b.x; });
    }

private:
    // Continuous move across the vertex shared by adjacent edges.
    static bool handover(int ja, double ya, int jb, double yb) {
        if (jb != ja + 1) return false;
        return jb - ya <= kHandover && yb - jb <= kHandover;
    }

    static void track(NNProfile& out, double v) { out.max_value = std::max(out.max_value, v); }

    void refine(NNProfile& out, double xa, int ja, double xb, int jb, int depth) {
        if (ja == jb) return;
        double lo = xa, hi = xb;
        while (hi - lo > kParamTol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (!below(edge(mid, jb).min_value, edge(mid, ja).min_value)) lo = mid;
            else hi = mid;
        }
        const double xm = 0.5 * (lo + hi);
        const NearestPoint c = all(xm);
        const EdgeDistanceProfile ea = edge(lo, ja), eb = edge(hi, jb);
        if (c.edge != ja && c.edge != jb && below(c.value, std::min(ea.min_value, eb.min_value)) && depth < 64 &&
            xm > xa && xm < xb) {
            refine(out, xa, ja, xm, c.edge, depth + 1);
            refine(out, xm, c.edge, xb, jb, depth + 1);
            return;
        }
        out.switches.push_back(xm);
        track(out, std::min(ea.min_value, eb.min_value));
        if (eb.min_param - ea.min_param > kJump && !handover(ja, ea.min_param, jb, eb.min_param))
            out.breakpoints.push_back({xm, ea.min_param, eb.min_param});
    }

    const PolygonInstance& inst_;
    const PolyCurve& src_;
    CurveId target_;
    int edges_;
};

}  // namespace

NearestPoint nearest_on(const PolygonInstance& inst, Point2 p, CurveId target) {
    const int len = target == CurveId::R ? inst.n() : inst.m();
    const PolyCurve& c = target == CurveId::R ? inst.R : inst.B;
    if (len < 2) return {1.0, geodesic_distance(inst, p, c[1]), 1};
    NearestPoint best;
    best.value = std::numeric_limits<double>::infinity();
    for (int j = 1; j < len; ++j) {
        const EdgeDistanceProfile e = edge_profile(inst, p, target, j);
        if (below(e.min_value, best.value)) best = {e.min_param, e.min_value, j};
    }
    return best;
}

NNProfile nn_profile(const PolygonInstance& inst, CurveId source) {
    NNProfile out;
    Envelope(inst, source).run(out);
    return out;
}

Fan fan_leaf(const PolygonInstance& inst, Point2 apex, double seed_x, double delta) {
    const int n = inst.n();
    if (!(seed_x >= 1.0 && seed_x <= n)) throw Error(ErrorKind::out_of_range, "fan seed outside R");
    if (geodesic_distance(inst, eval(inst.R, seed_x), apex) > slacked(delta))
        throw Error(ErrorKind::invalid_input, "fan seed farther than delta from the apex");
    Fan fan;
    fan.apex = apex;
    fan.seed_x = seed_x;
    fan.x_lo = fan.x_hi = seed_x;
    const double lim = slacked(delta);

    double x = seed_x;
    for (int i = std::min(static_cast<int>(std::floor(seed_x)), n - 1); i >= 1 && i < n; ++i) {
        const EdgeDistanceProfile p = edge_profile(inst, apex, CurveId::R, i);
        auto f = [&](double t) { return p.at(t); };
        if (f(i + 1.0) <= lim) {
            x = i + 1.0;
            continue;
        }
        x = bisect_boundary(f, std::max(x, static_cast<double>(i)), i + 1.0, delta, true);
        break;
    }
    fan.x_hi = x;

    x = seed_x;
    for (int i = std::min(static_cast<int>(std::ceil(seed_x)) - 1, n - 1); i >= 1; --i) {
        const EdgeDistanceProfile p = edge_profile(inst, apex, CurveId::R, i);
        auto f = [&](double t) { return p.at(t); };
        if (f(static_cast<double>(i)) <= lim) {
            x = i;
            continue;
        }
        x = bisect_boundary(f, static_cast<double>(i), std::min(x, i + 1.0), delta, false);
        break;
    }
    fan.x_lo = x;
    return fan;
}

SlabPartition build_slabs(const PolygonInstance& inst, const NNProfile& profile, double delta) {
    SlabPartition out;
    auto fan = [&](double y, double seed) {
        Fan f;
        f.apex_y = y;
        f.apex = eval(inst.B, y);
        f.seed_x = f.x_lo = f.x_hi = seed;
        if (out.empty_fan_leaf) return f;
        if (geodesic_distance(inst, eval(inst.R, seed), f.apex) > slacked(delta)) {
            out.empty_fan_leaf = true;
            return f;
        }
        f = fan_leaf(inst, f.apex, seed, delta);
        f.apex_y = y;
        return f;
    };

    double y = 1.0;
    Fan bottom = fan(1.0, 1.0);
    for (const NNBreak& bp : profile.breakpoints) {
        if (bp.y_before < y) continue;
        Fan lo = fan(bp.y_before, bp.x), hi = fan(bp.y_after, bp.x);
        out.slabs.push_back({SlabKind::near, y, bp.y_before, bottom, lo});
        out.slabs.push_back({SlabKind::far, bp.y_before, bp.y_after, lo, hi});
        y = bp.y_after;
        bottom = hi;
    }
    out.slabs.push_back({SlabKind::near, y, static_cast<double>(inst.m()), bottom, fan(inst.m(), inst.n())});
    return out;
}

}  // namespace geofrechet
