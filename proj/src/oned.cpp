#include "geofrechet/oned.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace geofrechet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Curve1D::Curve1D(std::vector<double> values, Side side, bool allow_zero)
    : values_(std::move(values)), side_(side) {
    if (values_.empty()) throw Error(ErrorKind::invalid_input, "empty 1D curve");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double v = values_[k];
        if (!std::isfinite(v)) throw Error(ErrorKind::invalid_input, "non-finite 1D value");
        const bool ok = side == Side::left ? (v < 0 || (allow_zero && v == 0)) : (v > 0 || (allow_zero && v == 0));
        if (!ok) throw Error(ErrorKind::invalid_input, "1D value on the wrong side of 0");
        mags_.push_back(std::fabs(v));
        rank_.push_back(static_cast<int>(k) + 1);
    }
}

double Curve1D::mag_at(double x) const {
    const int k = size();
    if (!(x >= 1.0) || !(x <= k)) throw Error(ErrorKind::out_of_range, "1D parameter out of range");
    const int i = std::min(static_cast<int>(std::floor(x)), k);
    if (i == k) return mag(k);
    const double t = x - i;
    return t == 0.0 ? mag(i) : (1.0 - t) * mag(i) + t * mag(i + 1);
}

bool Curve1D::closer(int a, int b) const {
    if (mag(a) != mag(b)) return mag(a) < mag(b);
    return rank(a) < rank(b);
}

Curve1D Curve1D::reversed() const {
    Curve1D c;
    c.values_.assign(values_.rbegin(), values_.rend());
    c.mags_.assign(mags_.rbegin(), mags_.rend());
    c.rank_.assign(rank_.rbegin(), rank_.rend());
    c.side_ = side_;
    return c;
}

std::vector<int> prefix_minima(const Curve1D& c) {
    std::vector<int> out{1};
    for (int i = 2; i <= c.size(); ++i)
        if (c.closer(i, out.back())) out.push_back(i);
    return out;
}

std::vector<int> suffix_minima(const Curve1D& c) {
    std::vector<int> out{c.size()};
    for (int i = c.size() - 1; i >= 1; --i)
        if (c.closer(i, out.back())) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

GridPoint closest_pair_1d(const Curve1D& r, const Curve1D& b) {
    GridPoint g;
    for (int i = 2; i <= r.size(); ++i)
        if (r.closer(i, g.i)) g.i = i;
    for (int j = 2; j <= b.size(); ++j)
        if (b.closer(j, g.j)) g.j = j;
    return g;
}

double path_cost_1d(const Curve1D& r, const Curve1D& b, const MatchingPath& path) {
    double cost = 0.0;
    auto at = [&](ParamPoint p) { return r.mag_at(p.x) + b.mag_at(p.y); };
    if (!path.waypoints.empty()) cost = at(path.waypoints.front());
    for (std::size_t k = 1; k < path.waypoints.size(); ++k) {
        const ParamPoint p = path.waypoints[k - 1], q = path.waypoints[k];
        std::vector<double> ts{1.0};
        auto crossings = [&](double u0, double u1) {
            if (u0 == u1) return;
            const double lo = std::min(u0, u1), hi = std::max(u0, u1);
            for (double v = std::floor(lo) + 1.0; v < hi; v += 1.0) ts.push_back((v - u0) / (u1 - u0));
        };
        crossings(p.x, q.x);
        crossings(p.y, q.y);
        for (double t : ts) {
            const ParamPoint s{t == 1.0 ? q.x : p.x + t * (q.x - p.x), t == 1.0 ? q.y : p.y + t * (q.y - p.y)};
            cost = std::max(cost, at(s));
        }
    }
    return cost;
}

namespace {

// Prefix-minima greedy over the vertex sequences ri (into r) and bi (into b),
// both ending at their closest vertex. Returns waypoints as sequence positions.
std::pair<std::vector<std::pair<int, int>>, double> greedy_half(const Curve1D& r, const Curve1D& b,
                                                                 const std::vector<int>& ri,
                                                                 const std::vector<int>& bi) {
    auto minima = [](const Curve1D& c, const std::vector<int>& seq) {
        std::vector<int> pm{0};
        for (std::size_t k = 1; k < seq.size(); ++k)
            if (c.closer(seq[k], seq[static_cast<std::size_t>(pm.back())])) pm.push_back(static_cast<int>(k));
        std::vector<double> segmax;
        for (std::size_t t = 0; t + 1 < pm.size(); ++t) {
            double mx = 0.0;
            for (int k = pm[t]; k <= pm[t + 1]; ++k) mx = std::max(mx, c.mag(seq[static_cast<std::size_t>(k)]));
            segmax.push_back(mx);
        }
        return std::make_pair(pm, segmax);
    };
    const auto [pr, sr] = minima(r, ri);
    const auto [pb, sb] = minima(b, bi);
    std::size_t k = 0, l = 0;
    double cost = r.mag(ri[0]) + b.mag(bi[0]);
    std::vector<std::pair<int, int>> way{{0, 0}};
    while (k + 1 < pr.size() || l + 1 < pb.size()) {
        const double cr = k + 1 < pr.size() ? sr[k] + b.mag(bi[static_cast<std::size_t>(pb[l])]) : kInf;
        const double cb = l + 1 < pb.size() ? r.mag(ri[static_cast<std::size_t>(pr[k])]) + sb[l] : kInf;
        if (cr <= cb) {
            ++k;
            cost = std::max(cost, cr);
        } else {
            ++l;
            cost = std::max(cost, cb);
        }
        way.emplace_back(pr[k], pb[l]);
    }
    return {way, cost};
}

}  // namespace

MatchingPath frechet_matching_1d(const Curve1D& r, const Curve1D& b) {
    const GridPoint cp = closest_pair_1d(r, b);
    const int n = r.size(), m = b.size();
    std::vector<int> ri, bi;
    for (int i = 1; i <= cp.i; ++i) ri.push_back(i);
    for (int j = 1; j <= cp.j; ++j) bi.push_back(j);
    const auto [w1, c1] = greedy_half(r, b, ri, bi);
    std::vector<int> rr, br;
    for (int i = n; i >= cp.i; --i) rr.push_back(i);
    for (int j = m; j >= cp.j; --j) br.push_back(j);
    const auto [w2, c2] = greedy_half(r, b, rr, br);

    MatchingPath path;
    for (const auto& [a, c] : w1) path.waypoints.push_back({static_cast<double>(ri[a]), static_cast<double>(bi[c])});
    for (auto it = w2.rbegin(); it != w2.rend(); ++it) {
        const ParamPoint p{static_cast<double>(rr[it->first]), static_cast<double>(br[it->second])};
        if (!(p == path.waypoints.back())) path.waypoints.push_back(p);
    }
    path.cost = std::max(c1, c2);
    return path;
}

// ---------------------------------------------------------------------------
// CurveIndex

CurveIndex::CurveIndex(const Curve1D& c) : curve_(&c), k_(c.size()) {
    roots_.assign(static_cast<std::size_t>(k_) + 1, -1);
    pool_.reserve(static_cast<std::size_t>(k_) * (std::bit_width(static_cast<unsigned>(k_)) + 2));
    for (int i = k_; i >= 1; --i) roots_[i - 1] = persist_set(roots_[i], 1, k_, i, c.mag(i));
    roots_.pop_back();
    tree_.resize(4 * static_cast<std::size_t>(k_));
    build(1, 1, k_);

    next_smaller_.assign(static_cast<std::size_t>(k_), 0);
    std::vector<int> stack;
    for (int i = k_; i >= 1; --i) {
        while (!stack.empty() && !c.closer(stack.back(), i)) stack.pop_back();
        next_smaller_[i - 1] = stack.empty() ? 0 : stack.back();
        stack.push_back(i);
    }
}

int CurveIndex::persist_set(int node, int lo, int hi, int pos, double v) {
    PNode copy = node >= 0 ? pool_[node] : PNode{-1, -1, -kInf};
    if (lo == hi) {
        copy.mx = v;
    } else {
        const int mid = (lo + hi) / 2;
        if (pos <= mid) copy.l = persist_set(copy.l, lo, mid, pos, v);
        else copy.r = persist_set(copy.r, mid + 1, hi, pos, v);
        const double lm = copy.l >= 0 ? pool_[copy.l].mx : -kInf;
        const double rm = copy.r >= 0 ? pool_[copy.r].mx : -kInf;
        copy.mx = std::max(lm, rm);
    }
    pool_.push_back(copy);
    return static_cast<int>(pool_.size()) - 1;
}

int CurveIndex::first_greater(int node, int lo, int hi, Threshold t) const {
    if (node < 0 || t.ok(pool_[node].mx)) return 0;
    if (lo == hi) return lo;
    const int mid = (lo + hi) / 2;
    const int l = first_greater(pool_[node].l, lo, mid, t);
    return l ? l : first_greater(pool_[node].r, mid + 1, hi, t);
}

void CurveIndex::check(int a, int b) const {
    if (a < 1 || b > k_ || a > b) throw Error(ErrorKind::out_of_range, "curve index query out of range");
}

int CurveIndex::last_below(int i, Threshold t) const {
    check(i, i);
    if (!t.ok(curve_->mag(i))) return i - 1;
    const int p = first_greater(roots_[i - 1], 1, k_, t);
    return p ? p - 1 : k_;
}

CurveIndex::RNode CurveIndex::combine(const RNode& a, const RNode& b) const {
    if (a.arg == 0) return b;
    if (b.arg == 0) return a;
    return {std::min(a.mn, b.mn), std::max(a.mx, b.mx), curve_->closer(b.arg, a.arg) ? b.arg : a.arg};
}

void CurveIndex::build(int node, int lo, int hi) {
    if (lo == hi) {
        tree_[node] = {curve_->mag(lo), curve_->mag(lo), lo};
        return;
    }
    const int mid = (lo + hi) / 2;
    build(2 * node, lo, mid);
    build(2 * node + 1, mid + 1, hi);
    tree_[node] = combine(tree_[2 * node], tree_[2 * node + 1]);
}

CurveIndex::RNode CurveIndex::query(int node, int lo, int hi, int a, int b) const {
    if (b < lo || hi < a) return {kInf, -kInf, 0};
    if (a <= lo && hi <= b) return tree_[node];
    const int mid = (lo + hi) / 2;
    return combine(query(2 * node, lo, mid, a, b), query(2 * node + 1, mid + 1, hi, a, b));
}

int CurveIndex::first_le(int node, int lo, int hi, int a, int b, Threshold t) const {
    if (b < lo || hi < a || !t.ok(tree_[node].mn)) return 0;
    if (lo == hi) return lo;
    const int mid = (lo + hi) / 2;
    const int l = first_le(2 * node, lo, mid, a, b, t);
    return l ? l : first_le(2 * node + 1, mid + 1, hi, a, b, t);
}

int CurveIndex::last_le(int node, int lo, int hi, int a, int b, Threshold t) const {
    if (b < lo || hi < a || !t.ok(tree_[node].mn)) return 0;
    if (lo == hi) return lo;
    const int mid = (lo + hi) / 2;
    const int r = last_le(2 * node + 1, mid + 1, hi, a, b, t);
    return r ? r : last_le(2 * node, lo, mid, a, b, t);
}

double CurveIndex::range_min(int a, int b) const {
    check(a, b);
    return query(1, 1, k_, a, b).mn;
}

double CurveIndex::range_max(int a, int b) const {
    check(a, b);
    return query(1, 1, k_, a, b).mx;
}

int CurveIndex::range_argmin(int a, int b) const {
    check(a, b);
    return query(1, 1, k_, a, b).arg;
}

int CurveIndex::first_below(int a, int b, Threshold t) const {
    check(a, b);
    return first_le(1, 1, k_, a, b, t);
}

int CurveIndex::last_below_in_range(int a, int b, Threshold t) const {
    check(a, b);
    return last_le(1, 1, k_, a, b, t);
}

// ---------------------------------------------------------------------------
// Greedy steps

GreedyStepper::GreedyStepper(const Curve1D& r, const Curve1D& b, double delta)
    : r_(r), b_(b), rr_(r.reversed()), br_(b.reversed()), ir_(r_), ib_(b_), irr_(rr_), ibr_(br_), delta_(delta) {}

std::optional<int> GreedyStepper::move_along(const Side2& s, int a, int c) const {
    if (a == s.a->size()) return std::nullopt;
    const int far = s.ia->last_below(a + 1, Threshold{s.c->mag(c), delta_});
    if (far <= a) return std::nullopt;
    const int best = s.ia->range_argmin(a, far);
    if (best == a) return std::nullopt;
    return best;
}

std::optional<int> GreedyStepper::move_across(const Side2& s, int a, int c) const {
    const int kc = s.c->size();
    if (c == kc) return std::nullopt;
    int bound = kc;
    if (const int next = s.ia->next_smaller(a)) {
        const double need = s.ia->range_max(a, next);
        const int first = s.ic->first_below(c + 1, kc, Threshold{need, delta_});
        if (first) bound = first;
    }
    const int reach = s.ic->last_below(c + 1, Threshold{s.a->mag(a), delta_});
    const int hi = std::min(reach, bound);
    if (hi <= c) return std::nullopt;
    const int best = s.ic->range_argmin(c, hi);
    if (best == c) return std::nullopt;
    return best;
}

std::optional<GridPoint> GreedyStepper::step(GridPoint p, Orientation o) const {
    const int n = r_.size(), m = b_.size();
    if (p.i < 1 || p.i > n || p.j < 1 || p.j > m) throw Error(ErrorKind::out_of_range, "grid point out of range");
    if (!free(p)) throw Error(ErrorKind::invalid_input, "greedy step from a point outside the free space");
    const bool rev = o == Orientation::reverse_horizontal || o == Orientation::reverse_vertical;
    const bool hor = o == Orientation::horizontal || o == Orientation::reverse_horizontal;
    const Side2 sr = rev ? Side2{&rr_, &br_, &irr_, &ibr_} : Side2{&r_, &b_, &ir_, &ib_};
    const Side2 sb{sr.c, sr.a, sr.ic, sr.ia};
    GridPoint q = rev ? GridPoint{n + 1 - p.i, m + 1 - p.j} : p;
    if (hor) {
        if (auto x = move_along(sr, q.i, q.j)) q.i = *x;
        else if (auto y = move_across(sr, q.i, q.j)) q.j = *y;
        else return std::nullopt;
    } else {
        if (auto y = move_along(sb, q.j, q.i)) q.j = *y;
        else if (auto x = move_across(sb, q.j, q.i)) q.i = *x;
        else return std::nullopt;
    }
    return rev ? GridPoint{n + 1 - q.i, m + 1 - q.j} : q;
}

ParamPoint GreedyStepper::extension(GridPoint p, Orientation o) const {
    const int n = r_.size(), m = b_.size();
    const bool rev = o == Orientation::reverse_horizontal || o == Orientation::reverse_vertical;
    const bool hor = o == Orientation::horizontal || o == Orientation::reverse_horizontal;
    const Curve1D& a = hor ? (rev ? rr_ : r_) : (rev ? br_ : b_);
    const CurveIndex& ia = hor ? (rev ? irr_ : ir_) : (rev ? ibr_ : ib_);
    const int ka = a.size();
    int pos = hor ? p.i : p.j;
    if (rev) pos = ka + 1 - pos;
    const double other = hor ? b_.mag(p.j) : r_.mag(p.i), U = delta_ - other;
    const int last = pos == ka ? ka : std::max(pos, ia.last_below(pos + 1, Threshold{other, delta_}));
    double x = last;
    if (last < ka) {
        const double lo = a.mag(last), hi = a.mag(last + 1);
        x = last + std::clamp((U - lo) / (hi - lo), 0.0, 1.0);
    }
    if (rev) x = ka + 1 - x;
    ParamPoint out{static_cast<double>(p.i), static_cast<double>(p.j)};
    (hor ? out.x : out.y) = x;
    (void)n;
    (void)m;
    return out;
}

// ---------------------------------------------------------------------------
// Forests

std::vector<AxisSegment> GreedyForest::segments() const {
    std::vector<AxisSegment> out;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (parent[v] < 0) continue;
        const ParamPoint p = vertices[v], q = vertices[static_cast<std::size_t>(parent[v])];
        out.push_back({{std::min(p.x, q.x), std::min(p.y, q.y)}, {std::max(p.x, q.x), std::max(p.y, q.y)}});
    }
    return out;
}

std::vector<std::vector<int>> GreedyForest::children() const {
    std::vector<std::vector<int>> ch(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (parent[v] >= 0) ch[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
    return ch;
}

namespace {

// Unit step direction from a towards b along their shared axis.
std::pair<int, int> axis_dir(ParamPoint a, ParamPoint b) {
    const int dx = (b.x > a.x) - (b.x < a.x), dy = (b.y > a.y) - (b.y < a.y);
    return {dx, dy};
}

double axis_len(ParamPoint a, ParamPoint b) { return std::fabs(b.x - a.x) + std::fabs(b.y - a.y); }

}  // namespace

GreedyForest build_greedy_forest(const GreedyStepper& stepper, const std::vector<GridPoint>& seeds,
                                 Orientation orientation, bool extend) {
    GreedyForest f;
    f.orientation = orientation;
    f.extended = extend;
    std::map<GridPoint, int> registry;
    std::vector<std::vector<int>> kids;

    auto add_vertex = [&](ParamPoint p, bool ext) {
        f.vertices.push_back(p);
        f.parent.push_back(-1);
        f.is_extension.push_back(ext);
        kids.emplace_back();
        return static_cast<int>(f.vertices.size()) - 1;
    };
    auto link = [&](int child, int par) {
        if (f.parent[child] >= 0) {
            auto& ks = kids[static_cast<std::size_t>(f.parent[child])];
            ks.erase(std::find(ks.begin(), ks.end(), child));
        }
        f.parent[child] = par;
        kids[static_cast<std::size_t>(par)].push_back(child);
    };
    auto pp = [](GridPoint g) { return ParamPoint{static_cast<double>(g.i), static_cast<double>(g.j)}; };

    for (const GridPoint& s : seeds) {
        if (!stepper.free(s)) throw Error(ErrorKind::invalid_input, "seed outside the free space");
        f.own_edges.emplace_back();
        auto& own = f.own_edges.back();
        if (auto it = registry.find(s); it != registry.end()) {
            f.seed_vertex.push_back(it->second);
            continue;
        }
        std::vector<GridPoint> path{s};
        int merge = -1;
        while (auto next = stepper.step(path.back(), orientation)) {
            if (auto it = registry.find(*next); it != registry.end()) {
                merge = it->second;
                break;
            }
            path.push_back(*next);
        }
        std::vector<int> ids;
        for (const GridPoint& g : path) {
            ids.push_back(add_vertex(pp(g), false));
            registry.emplace(g, ids.back());
        }
        f.seed_vertex.push_back(ids.front());
        for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
            link(ids[k], ids[k + 1]);
            own.emplace_back(ids[k], ids[k + 1]);
        }
        if (merge < 0) continue;
        const int p = ids.back();
        const ParamPoint pm = f.vertices[static_cast<std::size_t>(p)], mu = f.vertices[static_cast<std::size_t>(merge)];
        const auto dir = axis_dir(mu, pm);
        int overlap = -1;
        for (int c : kids[static_cast<std::size_t>(merge)])
            if (axis_dir(mu, f.vertices[static_cast<std::size_t>(c)]) == dir) overlap = c;
        if (overlap < 0) {
            link(p, merge);
            own.emplace_back(p, merge);
        } else if (axis_len(mu, pm) < axis_len(mu, f.vertices[static_cast<std::size_t>(overlap)])) {
            link(overlap, p);
            link(p, merge);
        } else {
            link(p, overlap);
            own.emplace_back(p, overlap);
        }
    }

    if (extend) {
        const std::size_t count = f.vertices.size();
        for (std::size_t v = 0; v < count; ++v) {
            if (f.parent[v] >= 0) continue;
            const ParamPoint p = f.vertices[v];
            const GridPoint g{static_cast<int>(p.x), static_cast<int>(p.y)};
            const int e = add_vertex(stepper.extension(g, orientation), true);
            link(static_cast<int>(v), e);
        }
    }
    return f;
}

GreedyForest build_greedy_forest(const Curve1D& r, const Curve1D& b, double delta,
                                 const std::vector<GridPoint>& seeds, Orientation orientation, bool extend) {
    const GreedyStepper stepper(r, b, delta);
    return build_greedy_forest(stepper, seeds, orientation, extend);
}

// ---------------------------------------------------------------------------
// Bichromatic sweep

namespace {

// Active x-intervals on the sweepline, keyed by compressed left endpoint;
// supports "some interval overlapping [a, b]" in logarithmic time.
class IntervalSet {
public:
    explicit IntervalSet(std::vector<double> coords) : xs_(std::move(coords)) {
        std::sort(xs_.begin(), xs_.end());
        xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
        size_ = std::max<std::size_t>(1, xs_.size());
        best_.assign(2 * size_, {-kInf, -1});
        leaves_.resize(size_);
    }

    void insert(double lo, double hi, int id) {
        const std::size_t k = slot(lo);
        leaves_[k].insert({hi, id});
        refresh(k);
    }

    void erase(double lo, double hi, int id) {
        const std::size_t k = slot(lo);
        leaves_[k].erase({hi, id});
        refresh(k);
    }

    /// Id of an active interval overlapping [a, b], or -1.
    int find(double a, double b) const {
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), b);
        const std::size_t cnt = static_cast<std::size_t>(it - xs_.begin());
        if (cnt == 0) return -1;
        std::pair<double, int> best{-kInf, -1};
        for (std::size_t lo = size_, hi = size_ + cnt; lo < hi; lo >>= 1, hi >>= 1) {
            if (lo & 1) best = std::max(best, best_[lo++]);
            if (hi & 1) best = std::max(best, best_[--hi]);
        }
        return best.first >= a ? best.second : -1;
    }

private:
    std::size_t slot(double x) const {
        return static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    }
    void refresh(std::size_t k) {
        std::size_t node = k + size_;
        best_[node] = leaves_[k].empty() ? std::pair<double, int>{-kInf, -1} : *leaves_[k].rbegin();
        for (node >>= 1; node >= 1; node >>= 1) best_[node] = std::max(best_[2 * node], best_[2 * node + 1]);
    }

    std::vector<double> xs_;
    std::size_t size_;
    std::vector<std::pair<double, int>> best_;
    std::vector<std::set<std::pair<double, int>>> leaves_;
};

// Flags the segments of `query` that touch some segment of `other`.
std::vector<bool> sweep_hits(const std::vector<AxisSegment>& target, const std::vector<AxisSegment>& other) {
    std::vector<double> xs, ys;
    for (const auto* set : {&target, &other})
        for (const AxisSegment& s : *set) {
            xs.push_back(s.a.x);
            xs.push_back(s.b.x);
            ys.push_back(s.a.y);
            ys.push_back(s.b.y);
        }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    struct Event {
        std::vector<int> start_t, start_o, end_t, end_o;
    };
    std::vector<Event> ev(ys.size());
    auto yslot = [&](double y) { return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()); };
    for (int k = 0; k < static_cast<int>(target.size()); ++k) {
        ev[yslot(target[k].a.y)].start_t.push_back(k);
        ev[yslot(target[k].b.y)].end_t.push_back(k);
    }
    for (int k = 0; k < static_cast<int>(other.size()); ++k) {
        ev[yslot(other[k].a.y)].start_o.push_back(k);
        ev[yslot(other[k].b.y)].end_o.push_back(k);
    }

    std::vector<bool> hit(target.size(), false);
    IntervalSet active_t(xs), active_o(xs);
    for (Event& e : ev) {
        for (int k : e.start_t) active_t.insert(target[k].a.x, target[k].b.x, k);
        for (int k : e.start_o) active_o.insert(other[k].a.x, other[k].b.x, k);
        for (int k : e.start_t) {
            if (active_o.find(target[k].a.x, target[k].b.x) >= 0) {
                hit[k] = true;
                active_t.erase(target[k].a.x, target[k].b.x, k);
            }
        }
        for (int k : e.start_o) {
            int t;
            while ((t = active_t.find(other[k].a.x, other[k].b.x)) >= 0) {
                hit[t] = true;
                active_t.erase(target[t].a.x, target[t].b.x, t);
            }
        }
        for (int k : e.end_t)
            if (!hit[k]) active_t.erase(target[k].a.x, target[k].b.x, k);
        for (int k : e.end_o) active_o.erase(other[k].a.x, other[k].b.x, k);
    }
    return hit;
}

}  // namespace

std::pair<std::vector<bool>, std::vector<bool>> bichromatic_intersections(const std::vector<AxisSegment>& red,
                                                                          const std::vector<AxisSegment>& blue) {
    return {sweep_hits(red, blue), sweep_hits(blue, red)};
}

// ---------------------------------------------------------------------------
// Propagation

PropagationForests propagation_forests(const Curve1D& r, const Curve1D& b, double delta,
                                       const std::vector<GridPoint>& S, const std::vector<GridPoint>& E) {
    const GreedyStepper stepper(r, b, delta);
    PropagationForests out;
    out.hor = build_greedy_forest(stepper, S, Orientation::horizontal, true);
    out.ver = build_greedy_forest(stepper, S, Orientation::vertical, true);
    out.rev_hor = build_greedy_forest(stepper, E, Orientation::reverse_horizontal, true);
    out.rev_ver = build_greedy_forest(stepper, E, Orientation::reverse_vertical, true);
    return out;
}

std::vector<GridPoint> propagate_reachability(const Curve1D& r, const Curve1D& b, double delta,
                                              const std::vector<GridPoint>& S, const std::vector<GridPoint>& E) {
    if (S.empty() || E.empty()) return {};
    const PropagationForests pf = propagation_forests(r, b, delta, S, E);

    std::vector<AxisSegment> red = pf.hor.segments();
    const auto vr = pf.ver.segments();
    red.insert(red.end(), vr.begin(), vr.end());

    std::vector<AxisSegment> blue;
    std::vector<std::pair<int, int>> owner;  // (forest, top-right vertex)
    const GreedyForest* rev[2] = {&pf.rev_hor, &pf.rev_ver};
    for (int t = 0; t < 2; ++t) {
        const GreedyForest& f = *rev[t];
        for (std::size_t v = 0; v < f.vertices.size(); ++v) {
            if (f.parent[v] < 0) continue;
            const ParamPoint p = f.vertices[v], q = f.vertices[static_cast<std::size_t>(f.parent[v])];
            blue.push_back({{std::min(p.x, q.x), std::min(p.y, q.y)}, {std::max(p.x, q.x), std::max(p.y, q.y)}});
            owner.emplace_back(t, static_cast<int>(v));
        }
    }

    const std::vector<bool> hit = sweep_hits(blue, red);
    std::vector<bool> reach(E.size(), false);
    for (int t = 0; t < 2; ++t) {
        const GreedyForest& f = *rev[t];
        const auto kids = f.children();
        std::vector<bool> seen(f.vertices.size(), false);
        std::vector<int> stack;
        for (std::size_t k = 0; k < blue.size(); ++k) {
            if (!hit[k] || owner[k].first != t || seen[static_cast<std::size_t>(owner[k].second)]) continue;
            stack.push_back(owner[k].second);
            seen[static_cast<std::size_t>(owner[k].second)] = true;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int c : kids[static_cast<std::size_t>(v)])
                    if (!seen[static_cast<std::size_t>(c)]) {
                        seen[static_cast<std::size_t>(c)] = true;
                        stack.push_back(c);
                    }
            }
        }
        for (std::size_t e = 0; e < E.size(); ++e)
            if (seen[static_cast<std::size_t>(f.seed_vertex[e])]) reach[e] = true;
    }
    std::vector<GridPoint> out;
    for (std::size_t e = 0; e < E.size(); ++e)
        if (reach[e]) out.push_back(E[e]);
    return out;
}

}  // namespace geofrechet
