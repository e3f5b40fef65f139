#pragma once

#include <memory>
#include <vector>

#include "geofrechet/geodesic.hpp"
#include "geofrechet/geometry.hpp"
#include "geofrechet/oned.hpp"

namespace geofrechet {

enum class Metric { euclidean, geodesic, one_d };

/// Closed interval of local parameters in [0, 1]; empty when lo > hi.
struct Interval {
    double lo = 1.0, hi = 0.0;
    bool empty() const { return lo > hi; }
};

/// Free intervals of the δ-free space on the grid lines of the parameter
/// space, for one curve pair under one metric.
class FreeSpaceModel {
public:
    virtual ~FreeSpaceModel() = default;
    virtual int n() const = 0;
    virtual int m() const = 0;
    virtual bool corner_free(int i, int j, double delta) const = 0;
    /// Free part of x = i, y in [j, j+1], as offsets in [0, 1].
    virtual Interval vertical(int i, int j, double delta) const = 0;
    /// Free part of y = j, x in [i, i+1].
    virtual Interval horizontal(int i, int j, double delta) const = 0;
    /// Upper bound on the Fréchet distance.
    virtual double upper_bound() const = 0;
    /// Largest distance counted as free at threshold δ.
    virtual double accepted(double delta) const { return delta; }
};

std::unique_ptr<FreeSpaceModel> euclidean_model(const PolyCurve& R, const PolyCurve& B);
std::unique_ptr<FreeSpaceModel> geodesic_model(const PolygonInstance& inst);
/// Model of R[x0, x1] against B[y0, y1] inside the full polygon.
std::unique_ptr<FreeSpaceModel> geodesic_model(const PolygonInstance& inst, double x0, double x1, double y0,
                                               double y1);
std::unique_ptr<FreeSpaceModel> oned_model(const Curve1D& r, const Curve1D& b);

/// Which of the grid points in E are reachable by a bimonotone path inside
/// the free space from a grid point of S.
std::vector<bool> reachable_flags(const FreeSpaceModel& model, double delta, const std::vector<GridPoint>& S,
                                  const std::vector<GridPoint>& E);

bool freespace_decide(const FreeSpaceModel& model, double delta);
bool freespace_decide(const PolyCurve& R, const PolyCurve& B, double delta);
bool freespace_decide(const PolygonInstance& inst, double delta);
bool freespace_decide(const Curve1D& r, const Curve1D& b, double delta);

/// Smallest δ accepted by the decider, by bisection on [0, upper bound]
/// to width `tol`; returns the distance accepted at the upper end.
double frechet_bisect(const FreeSpaceModel& model, double tol);

std::vector<GridPoint> reachable_points_bruteforce(const Curve1D& r, const Curve1D& b, double delta,
                                                   const std::vector<GridPoint>& S, const std::vector<GridPoint>& E);

}  // namespace geofrechet
