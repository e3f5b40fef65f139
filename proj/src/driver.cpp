#include "geofrechet/driver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "geofrechet/oracle.hpp"

namespace geofrechet {

Prepared prepare(const PolygonInstance& inst) {
    Prepared p;
    p.inst = &inst;
    p.profile = nn_profile(inst, CurveId::R);
    p.hausdorff = std::max(p.profile.max_value, nn_profile(inst, CurveId::B).max_value);
    return p;
}

double geodesic_hausdorff(const PolygonInstance& inst) { return prepare(inst).hausdorff; }

bool approx_decide(const Prepared& prep, double delta, double eps, DecisionContext* ctx) {
    const PolygonInstance& inst = *prep.inst;
    DecisionContext local;
    DecisionContext& c = ctx ? *ctx : local;
    c.delta = delta;
    c.epsilon = eps;
    c.current = {{1.0, 1.0}, TransitKind::vertex};
    if (delta < prep.hausdorff) return false;

    const SlabPartition part = build_slabs(inst, prep.profile, delta);
    c.slabs = part.slabs;
    if (part.empty_fan_leaf) return false;

    for (const Slab& slab : part.slabs) {
        const auto next = slab.kind == SlabKind::near ? advance_near_slab(inst, slab, c.current, delta)
                                                      : far_find_exit(inst, slab, c.current, delta, eps, &c.far_calls);
        if (!next) return false;
        c.current = *next;
        c.chain.push_back(*next);
    }
    const Fan& last = part.slabs.back().exit;
    return last.x_hi >= inst.n() - kParamTol && c.current.p.x <= last.x_hi + kParamTol;
}

bool approx_decide(const PolygonInstance& inst, double delta, double eps) {
    return approx_decide(prepare(inst), delta, eps);
}

Optimum approx_optimize(const Prepared& prep, double eps) {
    if (!(eps > 0)) throw Error(ErrorKind::invalid_input, "epsilon must be positive");
    Optimum out;
    out.hausdorff = prep.hausdorff;
    out.inner_epsilon = std::sqrt(1.0 + eps) - 1.0;
    if (prep.hausdorff <= 0.0) return out;

    const double ratio = 1.0 + out.inner_epsilon;
    const int top = static_cast<int>(std::ceil(std::log(3.0) / std::log(ratio)));
    auto grid = [&](int i) { return prep.hausdorff * std::pow(ratio, i); };
    int lo = -1, hi = top;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        ++out.decisions;
        if (approx_decide(prep, grid(mid), out.inner_epsilon)) hi = mid;
        else lo = mid;
    }
    out.value = ratio * grid(hi);
    return out;
}

double approx_optimize(const PolygonInstance& inst, double eps) { return approx_optimize(prepare(inst), eps).value; }

double strip_distance(const PolyCurve& R, const PolyCurve& B) {
    // Critical values on a line: vertex pairs across the curves, and half
    // the gap between two vertices of one curve.
    std::vector<double> cand{0.0};
    for (const Point2& p : R.vertices)
        for (const Point2& q : B.vertices) cand.push_back(dist(p, q));
    for (const PolyCurve* c : {&R, &B})
        for (const Point2& p : c->vertices)
            for (const Point2& q : c->vertices) cand.push_back(0.5 * dist(p, q));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (freespace_decide(R, B, cand[mid])) hi = mid;
        else lo = mid + 1;
    }
    return cand[lo];
}

namespace {

template <class F, class G>
auto on_curves(const PolyCurve& R, const PolyCurve& B, F&& regular, G&& strip) {
    std::optional<PolygonInstance> inst;
    try {
        inst = build_instance(R, B);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::degenerate) throw;
        return strip(strip_distance(R, B));
    }
    return regular(*inst);
}

}  // namespace

bool approx_decide(const PolyCurve& R, const PolyCurve& B, double delta, double eps) {
    return on_curves(
        R, B, [&](const PolygonInstance& inst) { return approx_decide(inst, delta, eps); },
        [&](double d) { return d <= slacked(delta); });
}

double approx_optimize(const PolyCurve& R, const PolyCurve& B, double eps) {
    if (!(eps > 0)) throw Error(ErrorKind::invalid_input, "epsilon must be positive");
    return on_curves(
        R, B, [&](const PolygonInstance& inst) { return approx_optimize(inst, eps); }, [](double d) { return d; });
}

}  // namespace geofrechet
