#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geofrechet/geometry.hpp"

namespace geofrechet {

enum class Side { left, right };

/// One-dimensional curve lying on one side of 0. Exact ties in |value| are
/// broken by `rank` (the vertex index unless the curve was reversed), so
/// comparisons between vertices use the pair (|value|, rank).
class Curve1D {
public:
    /// Throws unless every value lies strictly on `side` (or on 0 when
    /// `allow_zero` is set).
    Curve1D(std::vector<double> values, Side side, bool allow_zero = false);

    int size() const { return static_cast<int>(values_.size()); }
    Side side() const { return side_; }
    double value(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
    double mag(int i) const { return mags_[static_cast<std::size_t>(i - 1)]; }
    int rank(int i) const { return rank_[static_cast<std::size_t>(i - 1)]; }
    /// |value| at a fractional parameter.
    double mag_at(double x) const;
    /// True when vertex a is strictly closer to 0 than vertex b under the perturbation.
    bool closer(int a, int b) const;
    const std::vector<double>& values() const { return values_; }

    Curve1D reversed() const;

private:
    Curve1D() = default;
    std::vector<double> values_, mags_;
    std::vector<int> rank_;
    Side side_ = Side::left;
};

struct GridPoint {
    int i = 1;
    int j = 1;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::vector<int> prefix_minima(const Curve1D& c);
std::vector<int> suffix_minima(const Curve1D& c);

GridPoint closest_pair_1d(const Curve1D& r, const Curve1D& b);

/// Maximum of |r(x)| + |b(y)| along the polyline through the waypoints.
double path_cost_1d(const Curve1D& r, const Curve1D& b, const MatchingPath& path);

MatchingPath frechet_matching_1d(const Curve1D& r, const Curve1D& b);

/// Predicate offset + v <= delta, evaluated in that form so that it agrees
/// bit for bit with the free-space test.
struct Threshold {
    double offset = 0.0;
    double delta = 0.0;
    bool ok(double v) const { return offset + v <= delta; }
};

/// Vertex queries over the magnitudes |c(i)| of a curve.
class CurveIndex {
public:
    explicit CurveIndex(const Curve1D& c);

    int size() const { return k_; }
    /// Last i' >= i with max |c[i..i']| <= U, or i-1 when |c(i)| > U.
    int last_below(int i, double U) const { return last_below(i, Threshold{0.0, U}); }
    int last_below(int i, Threshold t) const;
    double range_min(int a, int b) const;
    double range_max(int a, int b) const;
    /// Vertex of [a, b] closest to 0 under the perturbation.
    int range_argmin(int a, int b) const;
    /// First / last vertex of [a, b] with |c| <= U, or 0 when none.
    int first_below(int a, int b, double U) const { return first_below(a, b, Threshold{0.0, U}); }
    int first_below(int a, int b, Threshold t) const;
    int last_below_in_range(int a, int b, double U) const { return last_below_in_range(a, b, Threshold{0.0, U}); }
    int last_below_in_range(int a, int b, Threshold t) const;
    /// First i* > i closer to 0 than i, or 0 when none.
    int next_smaller(int i) const { return next_smaller_[static_cast<std::size_t>(i - 1)]; }

private:
    struct PNode {
        int l = -1, r = -1;
        double mx = 0.0;
    };
    struct RNode {
        double mn, mx;
        int arg;
    };

    void check(int a, int b) const;
    int persist_set(int node, int lo, int hi, int pos, double v);
    int first_greater(int node, int lo, int hi, Threshold t) const;
    RNode combine(const RNode& a, const RNode& b) const;
    RNode query(int node, int lo, int hi, int a, int b) const;
    int first_le(int node, int lo, int hi, int a, int b, Threshold t) const;
    int last_le(int node, int lo, int hi, int a, int b, Threshold t) const;
    void build(int node, int lo, int hi);

    const Curve1D* curve_;
    int k_;
    std::vector<PNode> pool_;
    std::vector<int> roots_;  // roots_[i-1]: version holding vertices i..k
    std::vector<RNode> tree_;
    std::vector<int> next_smaller_;
};

enum class Orientation { horizontal, vertical, reverse_horizontal, reverse_vertical };

/// Greedy prefix-minima moves for one pair of curves and threshold. The
/// reverse orientations move left/down over suffix minima.
class GreedyStepper {
public:
    GreedyStepper(const Curve1D& r, const Curve1D& b, double delta);
    GreedyStepper(const GreedyStepper&) = delete;
    GreedyStepper& operator=(const GreedyStepper&) = delete;

    bool free(GridPoint p) const { return r_.mag(p.i) + b_.mag(p.j) <= delta_; }
    std::optional<GridPoint> step(GridPoint p, Orientation o) const;
    /// Far end of the maximal free segment leaving p along the orientation's
    /// preferred axis.
    ParamPoint extension(GridPoint p, Orientation o) const;

    const Curve1D& r() const { return r_; }
    const Curve1D& b() const { return b_; }
    double delta() const { return delta_; }

private:
    struct Side2 {
        const Curve1D* a;  // curve moved along
        const Curve1D* c;  // the other curve
        const CurveIndex* ia;
        const CurveIndex* ic;
    };
    std::optional<int> move_along(const Side2& s, int a, int c) const;
    std::optional<int> move_across(const Side2& s, int a, int c) const;

    Curve1D r_, b_, rr_, br_;
    CurveIndex ir_, ib_, irr_, ibr_;
    double delta_;
};

inline std::optional<GridPoint> greedy_step(const Curve1D& r, const Curve1D& b, GridPoint p, Orientation o,
                                            double delta) {
    return GreedyStepper(r, b, delta).step(p, o);
}

struct AxisSegment {
    ParamPoint a, b;  // a <= b in both coordinates
};

struct GreedyForest {
    Orientation orientation = Orientation::horizontal;
    bool extended = false;
    std::vector<ParamPoint> vertices;
    std::vector<int> parent;  // -1 for roots
    std::vector<bool> is_extension;
    std::vector<int> seed_vertex;
    /// Per seed: the edges (child, parent) first laid down by that seed's path.
    std::vector<std::vector<std::pair<int, int>>> own_edges;

    std::vector<AxisSegment> segments() const;
    std::vector<std::vector<int>> children() const;
};

/// Union of the maximal greedy matchings from all seeds. Throws when a seed
/// lies outside the free space.
GreedyForest build_greedy_forest(const GreedyStepper& stepper, const std::vector<GridPoint>& seeds,
                                 Orientation orientation, bool extend);

GreedyForest build_greedy_forest(const Curve1D& r, const Curve1D& b, double delta,
                                 const std::vector<GridPoint>& seeds, Orientation orientation, bool extend);

/// Flags for red segments touching some blue segment, and vice versa.
std::pair<std::vector<bool>, std::vector<bool>> bichromatic_intersections(const std::vector<AxisSegment>& red,
                                                                          const std::vector<AxisSegment>& blue);

/// Points of E that are δ-reachable from some point of S, in E's order.
std::vector<GridPoint> propagate_reachability(const Curve1D& r, const Curve1D& b, double delta,
                                              const std::vector<GridPoint>& S, const std::vector<GridPoint>& E);

struct PropagationForests {
    GreedyForest hor, ver, rev_hor, rev_ver;  // reverse forests in original coordinates
};

PropagationForests propagation_forests(const Curve1D& r, const Curve1D& b, double delta,
                                       const std::vector<GridPoint>& S, const std::vector<GridPoint>& E);

}  // namespace geofrechet
