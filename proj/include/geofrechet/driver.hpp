#pragma once

#include <vector>

#include "geofrechet/farslab.hpp"
#include "geofrechet/geometry.hpp"
#include "geofrechet/nearslab.hpp"
#include "geofrechet/nnprofile.hpp"

namespace geofrechet {

/// δ-independent data shared by all decision calls on one instance.
struct Prepared {
    const PolygonInstance* inst = nullptr;
    NNProfile profile;  // R onto B
    double hausdorff = 0.0;
};

Prepared prepare(const PolygonInstance& inst);

double geodesic_hausdorff(const PolygonInstance& inst);

/// State of one decision run, filled in as the slabs are visited.
struct DecisionContext {
    double delta = 0.0;
    double epsilon = 0.0;
    std::vector<Slab> slabs;
    std::vector<TransitPoint> chain;  // exit of each visited slab
    TransitPoint current;
    std::vector<FarRecord> far_calls;
};

/// True means d_F <= (1+ε)δ; false means d_F > δ.
bool approx_decide(const Prepared& prep, double delta, double eps, DecisionContext* ctx = nullptr);
bool approx_decide(const PolygonInstance& inst, double delta, double eps);

struct Optimum {
    double value = 0.0;
    double hausdorff = 0.0;
    double inner_epsilon = 0.0;  // slack passed to each decision
    int decisions = 0;
};

/// Value in [d_F, (1+ε) d_F], up to the decision slack.
Optimum approx_optimize(const Prepared& prep, double eps);
double approx_optimize(const PolygonInstance& inst, double eps);

/// Fréchet distance of curves on one line, which build_instance rejects as
/// degenerate, by search over the critical values of the free space.
double strip_distance(const PolyCurve& R, const PolyCurve& B);

/// Entry points on raw curves; degenerate inputs fall back to strip_distance.
bool approx_decide(const PolyCurve& R, const PolyCurve& B, double delta, double eps);
double approx_optimize(const PolyCurve& R, const PolyCurve& B, double eps);

}  // namespace geofrechet
