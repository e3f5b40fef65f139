#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geofrechet/generators.hpp"
#include "geofrechet/geometry.hpp"
#include "geofrechet/oned.hpp"

namespace geofrechet::io {

using Json = nlohmann::ordered_json;

/// Shortest "%.17g" form; non-finite values become null.
std::string format_number(double v);

/// Compact JSON with ", " and ": " separators and 17 significant digits.
std::string dump(const Json& j);

/// FNV-1a of the bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

/// Parses text as JSON; throws invalid_input on a syntax error.
Json parse(std::string_view text);

/// True when "R" holds points rather than numbers.
bool is_polygon_input(const Json& j);

/// {"R": [[x, y], ...], "B": [[x, y], ...]}; throws invalid_input.
CurvePair curves_from_json(const Json& j);
Json curves_to_json(const CurvePair& c);

struct Input1D {
    Values1D values;
    std::vector<GridPoint> S, E;
    std::optional<double> delta;
};

/// {"R": [...], "B": [...], "S": [[i, j], ...], "E": [[i, j], ...]}, with
/// S, E and "delta" optional; throws invalid_input.
Input1D oned_from_json(const Json& j);
Json oned_to_json(const Values1D& v);

Json points_to_json(const std::vector<ParamPoint>& pts);
Json points_to_json(const std::vector<GridPoint>& pts);

/// Content of a rendered figure. The parameter-space panel is shaded by
/// the distance function, darker where it exceeds `delta`.
struct Scene {
    const PolygonInstance* inst = nullptr;
    const Curve1D* r = nullptr;
    const Curve1D* b = nullptr;
    double delta = 0.0;
    std::vector<ParamPoint> matching;
    std::vector<AxisSegment> forest;
};

/// SVG 1.1 document with a fixed 1000x1000 view box. Layers: polygon (or
/// the two 1D curves), free-space heat map, forest, matching.
std::string render_svg(const Scene& scene);

}  // namespace geofrechet::io
