#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geofrechet {

enum class ErrorKind {
    endpoint_mismatch,
    self_intersection,
    curves_cross,
    degenerate,
    outside_polygon,
    out_of_range,
    invalid_input,
    not_convex,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
};

double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 a);
double dist(Point2 a, Point2 b);
Point2 lerp(Point2 a, Point2 b, double t);

/// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear.
/// Determinants with magnitude above 1e-12 are trusted; smaller ones are
/// re-evaluated in exact rational arithmetic.
int orient(Point2 a, Point2 b, Point2 c);

/// Closed-segment intersection test, exact up to the orientation predicate.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

/// Parameter t in [0,1] of the point on segment ab closest to p.
double closest_param_on_segment(Point2 p, Point2 a, Point2 b);

/// Polygonal curve parameterized over [1, size()], vertex i at parameter i.
struct PolyCurve {
    std::vector<Point2> vertices;

    PolyCurve() = default;
    PolyCurve(std::vector<Point2> v) : vertices(std::move(v)) {}

    int size() const { return static_cast<int>(vertices.size()); }
    const Point2& operator[](int i) const { return vertices[static_cast<std::size_t>(i - 1)]; }
    const Point2& front() const { return vertices.front(); }
    const Point2& back() const { return vertices.back(); }
};

Point2 eval(const PolyCurve& curve, double x);
PolyCurve subcurve(const PolyCurve& curve, double x, double x2);
PolyCurve reversed(const PolyCurve& curve);
double curve_length(const PolyCurve& curve);

/// Parameter bookkeeping for a subcurve C[x, x2]: maps subcurve parameters
/// back to parameters of C and forth.
struct SubcurveMap {
    std::vector<double> breaks;  // parent parameter of each subcurve vertex

    SubcurveMap(double x, double x2);
    int size() const { return static_cast<int>(breaks.size()); }
    double to_parent(double u) const;
    double from_parent(double x) const;
};

struct ParamPoint {
    double x = 1.0;
    double y = 1.0;
    friend bool operator==(const ParamPoint& a, const ParamPoint& b) { return a.x == b.x && a.y == b.y; }
};

struct MatchingPath {
    std::vector<ParamPoint> waypoints;
    double cost = 0.0;
};

/// True when both coordinates never decrease along the path.
bool is_bimonotone(const MatchingPath& path, double tol = 0.0);

struct Triangle {
    std::array<int, 3> v{};    // boundary vertex indices, counter-clockwise
    std::array<int, 3> nbr{};  // triangle across edge (v[k], v[k+1]), -1 on the boundary
};

/// Validated pair of curves bounding a simple polygon.
///
/// The boundary loop lists R forward and then the interior vertices of B
/// backward, which traverses the polygon clockwise. Boundary edge k joins
/// loop vertices k and k+1 (mod loop size).
struct PolygonInstance {
    PolyCurve R;
    PolyCurve B;
    bool swapped = false;  // input curves were exchanged to make R clockwise

    std::vector<Point2> loop;
    std::vector<Triangle> triangles;
    std::vector<int> edge_triangle;  // boundary edge -> incident triangle
    std::vector<int> tree_parent;    // dual tree rooted at triangle 0
    std::vector<int> tree_depth;

    int n() const { return R.size(); }
    int m() const { return B.size(); }
    int loop_index_R(int i) const;  // 1-based vertex of R
    int loop_index_B(int j) const;  // 1-based vertex of B
    /// Boundary edge holding edge [i, i+1] of the curve, plus whether the
    /// curve traverses it against the loop direction.
    std::pair<int, bool> boundary_edge_R(int i) const;
    std::pair<int, bool> boundary_edge_B(int j) const;
    double area() const;
};

/// Validates the curves and triangulates the polygon they bound.
/// Consecutive duplicate vertices are merged first.
PolygonInstance build_instance(PolyCurve R, PolyCurve B);

/// Signed area of a closed polygon (positive when counter-clockwise).
double signed_area(const std::vector<Point2>& poly);

/// Ear-clipping triangulation of a simple polygon given counter-clockwise.
/// Returns index triples into `poly`.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Point2>& poly);

}  // namespace geofrechet
