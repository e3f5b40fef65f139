#include "geofrechet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geofrechet {

namespace {

constexpr double kNone = std::numeric_limits<double>::infinity();

// {t in [0,1] : |a + t(b-a) - p| <= delta}.
Interval disk_segment(Point2 p, Point2 a, Point2 b, double delta) {
    const Point2 d = b - a, f = a - p;
    const double A = dot(d, d), Bh = dot(f, d), C = dot(f, f) - delta * delta;
    if (A == 0.0) return C <= 0.0 ? Interval{0.0, 1.0} : Interval{};
    const double disc = Bh * Bh - A * C;
    if (disc < 0.0) return {};
    const double s = std::sqrt(disc);
    const double q = Bh >= 0.0 ? -(Bh + s) : -(Bh - s);
    double t1 = q / A, t2 = q != 0.0 ? C / q : -t1;
    if (t1 > t2) std::swap(t1, t2);
    return {std::max(t1, 0.0), std::min(t2, 1.0)};
}

// {t in [0,1] : p + t(q-p) <= U}.
Interval below_linear(double p, double q, double U) {
    if (p <= U && q <= U) return {0.0, 1.0};
    if (p > U && q > U) return {};
    if (p <= U) return {0.0, (U - p) / (q - p)};
    return {(p - U) / (p - q), 1.0};
}

class EuclideanModel final : public FreeSpaceModel {
public:
    EuclideanModel(const PolyCurve& R, const PolyCurve& B) : R_(R), B_(B) {}
    int n() const override { return R_.size(); }
    int m() const override { return B_.size(); }
    bool corner_free(int i, int j, double delta) const override { return dist(R_[i], B_[j]) <= delta; }
    Interval vertical(int i, int j, double delta) const override {
        return disk_segment(R_[i], B_[j], B_[j + 1], delta);
    }
    Interval horizontal(int i, int j, double delta) const override {
        return disk_segment(B_[j], R_[i], R_[i + 1], delta);
    }
    double upper_bound() const override {
        double mx = 0.0;
        for (int i = 1; i <= n(); ++i)
            for (int j = 1; j <= m(); ++j) mx = std::max(mx, dist(R_[i], B_[j]));
        return mx;
    }

private:
    PolyCurve R_, B_;
};

class GeodesicModel final : public FreeSpaceModel {
public:
    GeodesicModel(const PolygonInstance& inst, double x0, double x1, double y0, double y1)
        : xs_(range_vertices(x0, x1)), ys_(range_vertices(y0, y1)) {
        n_ = static_cast<int>(xs_.size());
        m_ = static_cast<int>(ys_.size());
        corner_.assign(static_cast<std::size_t>(n_ * m_), 0.0);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= m_; ++j) corner_[idx(i, j)] = geodesic_distance(inst, R(inst, i), B(inst, j));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j < m_; ++j) vert_.push_back(piece(inst, R(inst, i), ys_, j, false));
        for (int i = 1; i < n_; ++i)
            for (int j = 1; j <= m_; ++j) hor_.push_back(piece(inst, B(inst, j), xs_, i, true));
    }
    int n() const override { return n_; }
    int m() const override { return m_; }
    bool corner_free(int i, int j, double delta) const override { return corner_[idx(i, j)] <= slacked(delta); }
    Interval vertical(int i, int j, double delta) const override {
        return vert_[static_cast<std::size_t>((i - 1) * (m_ - 1) + (j - 1))].sublevel(delta);
    }
    Interval horizontal(int i, int j, double delta) const override {
        return hor_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))].sublevel(delta);
    }
    double upper_bound() const override { return *std::max_element(corner_.begin(), corner_.end()); }
    double accepted(double delta) const override { return slacked(delta); }

private:
    // Field of one boundary edge restricted to the offsets [u0, u1].
    struct Piece {
        SegmentField field;
        double u0 = 0.0, u1 = 1.0;

        Interval sublevel(double delta) const {
            const auto [u, v] = field.minimum(u0, u1);
            if (v > slacked(delta)) return {};
            const double lo = bisect_boundary(field, u0, u, delta, false);
            const double hi = bisect_boundary(field, u, u1, delta, true);
            const double w = u1 - u0;
            if (!(w > 0)) return {0.0, 1.0};
            return {std::clamp((lo - u0) / w, 0.0, 1.0), std::clamp((hi - u0) / w, 0.0, 1.0)};
        }
    };

    static std::vector<double> range_vertices(double lo, double hi) {
        std::vector<double> out{lo};
        for (double k = std::floor(lo) + 1.0; k < hi; k += 1.0) out.push_back(k);
        if (hi > lo) out.push_back(hi);
        return out;
    }

    Point2 R(const PolygonInstance& inst, int i) const { return eval(inst.R, xs_[static_cast<std::size_t>(i - 1)]); }
    Point2 B(const PolygonInstance& inst, int j) const { return eval(inst.B, ys_[static_cast<std::size_t>(j - 1)]); }

    static Piece piece(const PolygonInstance& inst, Point2 source, const std::vector<double>& ps, int k, bool on_r) {
        const double a = ps[static_cast<std::size_t>(k - 1)], b = ps[static_cast<std::size_t>(k)];
        const int e = static_cast<int>(std::floor(a));
        const auto [edge, rev] = on_r ? inst.boundary_edge_R(e) : inst.boundary_edge_B(e);
        return {segment_field(inst, source, edge, rev), a - e, b - e};
    }

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * m_ + (j - 1)); }

    std::vector<double> xs_, ys_;
    int n_ = 0, m_ = 0;
    std::vector<double> corner_;
    std::vector<Piece> vert_, hor_;
};

class OneDModel final : public FreeSpaceModel {
public:
    OneDModel(const Curve1D& r, const Curve1D& b) : r_(r), b_(b) {}
    int n() const override { return r_.size(); }
    int m() const override { return b_.size(); }
    bool corner_free(int i, int j, double delta) const override { return r_.mag(i) + b_.mag(j) <= delta; }
    Interval vertical(int i, int j, double delta) const override {
        return below_linear(b_.mag(j), b_.mag(j + 1), delta - r_.mag(i));
    }
    Interval horizontal(int i, int j, double delta) const override {
        return below_linear(r_.mag(i), r_.mag(i + 1), delta - b_.mag(j));
    }
    double upper_bound() const override {
        double a = 0.0, c = 0.0;
        for (int i = 1; i <= n(); ++i) a = std::max(a, r_.mag(i));
        for (int j = 1; j <= m(); ++j) c = std::max(c, b_.mag(j));
        return a + c;
    }

private:
    Curve1D r_, b_;
};

// Free interval with its ends snapped to free grid corners.
Interval snap(Interval iv, bool start_free, bool end_free) {
    if (start_free) {
        iv.lo = 0.0;
        iv.hi = std::max(iv.hi, 0.0);
    }
    if (end_free) {
        iv.hi = 1.0;
        iv.lo = std::min(iv.lo, 1.0);
    }
    return iv;
}

}  // namespace

std::unique_ptr<FreeSpaceModel> euclidean_model(const PolyCurve& R, const PolyCurve& B) {
    return std::make_unique<EuclideanModel>(R, B);
}

std::unique_ptr<FreeSpaceModel> geodesic_model(const PolygonInstance& inst) {
    return std::make_unique<GeodesicModel>(inst, 1.0, inst.n(), 1.0, inst.m());
}

std::unique_ptr<FreeSpaceModel> geodesic_model(const PolygonInstance& inst, double x0, double x1, double y0,
                                               double y1) {
    if (!(1.0 <= x0 && x0 <= x1 && x1 <= inst.n() && 1.0 <= y0 && y0 <= y1 && y1 <= inst.m()))
        throw Error(ErrorKind::out_of_range, "subcurve range outside the curves");
    return std::make_unique<GeodesicModel>(inst, x0, x1, y0, y1);
}

std::unique_ptr<FreeSpaceModel> oned_model(const Curve1D& r, const Curve1D& b) {
    return std::make_unique<OneDModel>(r, b);
}

std::vector<bool> reachable_flags(const FreeSpaceModel& model, double delta, const std::vector<GridPoint>& S,
                                  const std::vector<GridPoint>& E) {
    const int n = model.n(), m = model.m();
    auto cf = [&](int i, int j) { return model.corner_free(i, j, delta); };

    // fv[i][j]: x = i, y in [j, j+1]; fh[i][j]: y = j, x in [i, i+1].
    std::vector<std::vector<Interval>> fv(n + 1, std::vector<Interval>(m + 1)), fh = fv;
    std::vector<std::vector<double>> rv(n + 1, std::vector<double>(m + 1, kNone)), rh = rv;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < m; ++j) fv[i][j] = snap(model.vertical(i, j, delta), cf(i, j), cf(i, j + 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= m; ++j) fh[i][j] = snap(model.horizontal(i, j, delta), cf(i, j), cf(i + 1, j));

    auto offer = [](const Interval& iv, double& reach, double lo) {
        if (iv.empty()) return;
        lo = std::max(lo, iv.lo);
        if (lo <= iv.hi) reach = std::min(reach, lo);
    };

    for (const GridPoint& s : S) {
        if (!cf(s.i, s.j)) continue;
        for (int j = s.j; j < m && fv[s.i][j].lo == 0.0 && !fv[s.i][j].empty(); ++j) {
            offer(fv[s.i][j], rv[s.i][j], 0.0);
            if (fv[s.i][j].hi < 1.0) break;
        }
        for (int i = s.i; i < n && fh[i][s.j].lo == 0.0 && !fh[i][s.j].empty(); ++i) {
            offer(fh[i][s.j], rh[i][s.j], 0.0);
            if (fh[i][s.j].hi < 1.0) break;
        }
    }

    for (int i = 1; i < n; ++i)
        for (int j = 1; j < m; ++j) {
            const double left = rv[i][j], bottom = rh[i][j];
            if (bottom != kNone) offer(fv[i + 1][j], rv[i + 1][j], 0.0);
            else if (left != kNone) offer(fv[i + 1][j], rv[i + 1][j], left);
            if (left != kNone) offer(fh[i][j + 1], rh[i][j + 1], 0.0);
            else if (bottom != kNone) offer(fh[i][j + 1], rh[i][j + 1], bottom);
        }

    std::vector<bool> out;
    for (const GridPoint& t : E) {
        bool ok = false;
        if (cf(t.i, t.j)) {
            ok = std::find(S.begin(), S.end(), t) != S.end();
            if (t.j >= 2 && rv[t.i][t.j - 1] != kNone && fv[t.i][t.j - 1].hi == 1.0) ok = true;
            if (t.i >= 2 && rh[t.i - 1][t.j] != kNone && fh[t.i - 1][t.j].hi == 1.0) ok = true;
        }
        out.push_back(ok);
    }
    return out;
}

bool freespace_decide(const FreeSpaceModel& model, double delta) {
    return reachable_flags(model, delta, {GridPoint{1, 1}}, {GridPoint{model.n(), model.m()}}).front();
}

bool freespace_decide(const PolyCurve& R, const PolyCurve& B, double delta) {
    return freespace_decide(*euclidean_model(R, B), delta);
}

bool freespace_decide(const PolygonInstance& inst, double delta) {
    return freespace_decide(*geodesic_model(inst), delta);
}

bool freespace_decide(const Curve1D& r, const Curve1D& b, double delta) {
    return freespace_decide(*oned_model(r, b), delta);
}

double frechet_bisect(const FreeSpaceModel& model, double tol) {
    double lo = 0.0, hi = model.upper_bound();
    if (freespace_decide(model, 0.0)) return 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (freespace_decide(model, mid)) hi = mid;
        else lo = mid;
    }
    return model.accepted(hi);
}

std::vector<GridPoint> reachable_points_bruteforce(const Curve1D& r, const Curve1D& b, double delta,
                                                   const std::vector<GridPoint>& S, const std::vector<GridPoint>& E) {
    const auto flags = reachable_flags(*oned_model(r, b), delta, S, E);
    std::vector<GridPoint> out;
    for (std::size_t k = 0; k < E.size(); ++k)
        if (flags[k]) out.push_back(E[k]);
    return out;
}

}  // namespace geofrechet
