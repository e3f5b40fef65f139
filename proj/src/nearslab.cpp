#include "geofrechet/nearslab.hpp"

#include <algorithm>
#include <cmath>

namespace geofrechet {

namespace {

bool inside(double x, const Fan& f) { return x >= f.x_lo - kParamTol && x <= f.x_hi + kParamTol; }

}  // namespace

std::vector<TransitPoint> transit_exits_on_segment(const PolygonInstance& inst, int i, double y, const Fan& exit) {
    if (i < 1 || i >= inst.n()) throw Error(ErrorKind::out_of_range, "edge index out of range");
    if (i + 1.0 < exit.x_lo - kParamTol || i > exit.x_hi + kParamTol)
        throw Error(ErrorKind::out_of_range, "segment misses the exit interval");
    std::vector<TransitPoint> out;
    if (inside(i, exit)) out.push_back({{static_cast<double>(i), y}, TransitKind::vertex});
    const EdgeDistanceProfile p = edge_profile(inst, eval(inst.B, y), CurveId::R, i);
    const double x = p.min_param;
    if (x - i > 1e-12 && i + 1.0 - x > 1e-12 && inside(x, exit))
        out.push_back({{std::clamp(x, exit.x_lo, exit.x_hi), y}, TransitKind::locally_closest});
    if (inside(i + 1.0, exit)) out.push_back({{i + 1.0, y}, TransitKind::vertex});
    return out;
}

std::vector<TransitPoint> transit_exits(const PolygonInstance& inst, double y, const Fan& exit) {
    std::vector<TransitPoint> out;
    if (inst.n() < 2) {
        out.push_back({{1.0, y}, TransitKind::vertex});
        return out;
    }
    const int first = std::clamp(static_cast<int>(std::floor(exit.x_lo + kParamTol)) - 1, 1, inst.n() - 1);
    const int last = std::clamp(static_cast<int>(std::floor(exit.x_hi)), 1, inst.n() - 1);
    for (int i = first; i <= last; ++i) {
        if (i + 1.0 < exit.x_lo - kParamTol || i > exit.x_hi + kParamTol) continue;
        for (const TransitPoint& t : transit_exits_on_segment(inst, i, y, exit))
            if (out.empty() || t.p.x > out.back().p.x + 1e-12) out.push_back(t);
    }
    return out;
}

std::optional<TransitPoint> advance_near_slab(const PolygonInstance& inst, const Slab& slab,
                                              const TransitPoint& entrance, double delta) {
    (void)delta;
    if (slab.kind != SlabKind::near) throw Error(ErrorKind::invalid_input, "advance_near_slab on a far slab");
    const Fan& exit = slab.exit;
    const double x = entrance.p.x;
    if (x > exit.x_hi + kParamTol) return std::nullopt;
    if (inst.n() >= 2) {
        const int first = std::clamp(static_cast<int>(std::floor(std::max(x, exit.x_lo))), 1, inst.n() - 1);
        const int last = std::clamp(static_cast<int>(std::floor(exit.x_hi)), 1, inst.n() - 1);
        for (int i = first; i <= last; ++i) {
            if (i + 1.0 < exit.x_lo - kParamTol || i > exit.x_hi + kParamTol) continue;
            for (const TransitPoint& t : transit_exits_on_segment(inst, i, slab.y_hi, exit))
                if (t.p.x >= x - 1e-12) return t;
        }
    } else if (inside(1.0, exit)) {
        return TransitPoint{{1.0, slab.y_hi}, TransitKind::vertex};
    }
    return TransitPoint{{std::clamp(x, exit.x_lo, exit.x_hi), slab.y_hi}, TransitKind::column};
}

}  // namespace geofrechet
