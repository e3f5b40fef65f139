#include "geofrechet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>

#include "geofrechet/geodesic.hpp"

namespace geofrechet::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_input, what); }

void write(std::string& out, const Json& j) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ", ";
                first = false;
                out += Json(it.key()).dump();
                out += ": ";
                write(out, it.value());
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ", ";
                write(out, j[k]);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: out += format_number(j.get<double>()); break;
        default: out += j.dump();
    }
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) bad(std::string(what) + ": non-finite number");
    return v;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
    if (!it->is_array()) bad(std::string("\"") + key + "\" must be an array");
    return *it;
}

PolyCurve points(const Json& arr, const char* key) {
    PolyCurve c;
    for (const Json& p : arr) {
        if (!p.is_array() || p.size() != 2) bad(std::string(key) + ": points must be [x, y] pairs");
        c.vertices.push_back({number(p[0], key), number(p[1], key)});
    }
    if (c.vertices.empty()) bad(std::string(key) + ": empty curve");
    return c;
}

std::vector<double> values(const Json& arr, const char* key) {
    std::vector<double> v;
    for (const Json& x : arr) v.push_back(number(x, key));
    if (v.empty()) bad(std::string(key) + ": empty curve");
    return v;
}

std::vector<GridPoint> grid_points(const Json& j, const char* key) {
    std::vector<GridPoint> out;
    const auto it = j.find(key);
    if (it == j.end()) return out;
    if (!it->is_array()) bad(std::string("\"") + key + "\" must be an array");
    for (const Json& p : *it) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            bad(std::string(key) + ": entries must be [i, j] integer pairs");
        out.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return out;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Maps a rectangle of world coordinates into a panel, y pointing up.
struct Frame {
    double x0, y0, x1, y1;      // world
    double px, py, pw, ph;      // panel
    double sx(double x) const { return px + (x1 > x0 ? (x - x0) / (x1 - x0) : 0.5) * pw; }
    double sy(double y) const { return py + ph - (y1 > y0 ? (y - y0) / (y1 - y0) : 0.5) * ph; }
};

Frame fit(double x0, double y0, double x1, double y1, double px, double py, double pw, double ph, bool square) {
    if (square) {
        const double w = x1 - x0, h = y1 - y0, s = std::max(w, h);
        const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
        return {cx - 0.5 * s, cy - 0.5 * s, cx + 0.5 * s, cy + 0.5 * s, px, py, pw, ph};
    }
    return {x0, y0, x1, y1, px, py, pw, ph};
}

std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& attrs) {
    std::string s = "<polyline " + attrs + " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) s += ' ';
        s += fixed(pts[k].first) + "," + fixed(pts[k].second);
    }
    return s + "\"/>\n";
}

}  // namespace

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump(const Json& j) {
    std::string out;
    write(out, j);
    return out;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

bool is_polygon_input(const Json& j) {
    const Json& r = field(j, "R");
    return !r.empty() && r[0].is_array();
}

CurvePair curves_from_json(const Json& j) { return {points(field(j, "R"), "R"), points(field(j, "B"), "B")}; }

Json curves_to_json(const CurvePair& c) {
    Json out = Json::object();
    for (const auto& [key, curve] : {std::pair{"R", &c.R}, std::pair{"B", &c.B}}) {
        Json arr = Json::array();
        for (const Point2& p : curve->vertices) arr.push_back(Json::array({p.x, p.y}));
        out[key] = std::move(arr);
    }
    return out;
}

Input1D oned_from_json(const Json& j) {
    Input1D in;
    in.values.R = values(field(j, "R"), "R");
    in.values.B = values(field(j, "B"), "B");
    in.S = grid_points(j, "S");
    in.E = grid_points(j, "E");
    if (const auto it = j.find("delta"); it != j.end()) in.delta = number(*it, "delta");
    return in;
}

Json oned_to_json(const Values1D& v) {
    Json out = Json::object();
    out["R"] = v.R;
    out["B"] = v.B;
    return out;
}

Json points_to_json(const std::vector<ParamPoint>& pts) {
    Json arr = Json::array();
    for (const ParamPoint& p : pts) arr.push_back(Json::array({p.x, p.y}));
    return arr;
}

Json points_to_json(const std::vector<GridPoint>& pts) {
    Json arr = Json::array();
    for (const GridPoint& p : pts) arr.push_back(Json::array({p.i, p.j}));
    return arr;
}

std::string render_svg(const Scene& sc) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n"
          "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    int n = 1, m = 1;
    std::function<double(double, double)> value;
    os << "<g id=\"curves\">\n";
    if (sc.inst) {
        const PolygonInstance& inst = *sc.inst;
        n = inst.n();
        m = inst.m();
        double x0 = inst.loop[0].x, x1 = x0, y0 = inst.loop[0].y, y1 = y0;
        for (const Point2& p : inst.loop) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        const Frame f = fit(x0, y0, x1, y1, 250, 20, 460, 460, true);
        std::string poly = "<polygon fill=\"#eef2f7\" stroke=\"none\" points=\"";
        for (std::size_t k = 0; k < inst.loop.size(); ++k)
            poly += (k ? " " : "") + fixed(f.sx(inst.loop[k].x)) + "," + fixed(f.sy(inst.loop[k].y));
        os << poly << "\"/>\n";
        for (const auto& [curve, color] : {std::pair{&inst.R, "#c0392b"}, std::pair{&inst.B, "#2471a3"}}) {
            std::vector<std::pair<double, double>> pts;
            for (const Point2& p : curve->vertices) pts.push_back({f.sx(p.x), f.sy(p.y)});
            os << polyline(pts, std::string("fill=\"none\" stroke-width=\"2\" stroke=\"") + color + "\"");
        }
        value = [&inst](double x, double y) { return geodesic_distance(inst, eval(inst.R, x), eval(inst.B, y)); };
    } else if (sc.r && sc.b) {
        n = sc.r->size();
        m = sc.b->size();
        double lo = 0.0, hi = 0.0;
        for (int i = 1; i <= n; ++i) lo = std::min(lo, sc.r->value(i));
        for (int j = 1; j <= m; ++j) hi = std::max(hi, sc.b->value(j));
        const Frame f{0.0, lo, 1.0, hi, 40, 20, 920, 460};
        os << "<line stroke=\"#888\" x1=\"40\" x2=\"960\" y1=\"" << fixed(f.sy(0.0)) << "\" y2=\"" << fixed(f.sy(0.0))
           << "\"/>\n";
        for (const auto& [c, color] : {std::pair{sc.r, "#c0392b"}, std::pair{sc.b, "#2471a3"}}) {
            std::vector<std::pair<double, double>> pts;
            const int k = c->size();
            for (int i = 1; i <= k; ++i) pts.push_back({f.sx(k > 1 ? (i - 1.0) / (k - 1.0) : 0.5), f.sy(c->value(i))});
            os << polyline(pts, std::string("fill=\"none\" stroke-width=\"2\" stroke=\"") + color + "\"");
        }
        const Curve1D* r = sc.r;
        const Curve1D* b = sc.b;
        value = [r, b](double x, double y) { return r->mag_at(x) + b->mag_at(y); };
    }
    os << "</g>\n";

    const Frame ps{1.0, 1.0, static_cast<double>(n), static_cast<double>(m), 40, 520, 920, 460};
    os << "<g id=\"freespace\">\n";
    if (value) {
        constexpr int kx = 92, ky = 46;
        std::vector<double> v(kx * ky);
        double top = 0.0;
        for (int a = 0; a < kx; ++a)
            for (int c = 0; c < ky; ++c) {
                const double x = 1.0 + (n - 1.0) * (a + 0.5) / kx, y = 1.0 + (m - 1.0) * (c + 0.5) / ky;
                v[a * ky + c] = value(x, y);
                top = std::max(top, v[a * ky + c]);
            }
        for (int a = 0; a < kx; ++a)
            for (int c = 0; c < ky; ++c) {
                const double d = v[a * ky + c];
                const double t = top > 0 ? d / top : 0.0;
                const int g = static_cast<int>(std::lround(255 - 120 * t));
                const bool free = d <= slacked(sc.delta);
                const int rb = free ? g * 4 / 5 : g;
                char fill[16];
                std::snprintf(fill, sizeof fill, "#%02x%02x%02x", rb, g, rb);
                os << "<rect x=\"" << fixed(40 + 920.0 * a / kx) << "\" y=\"" << fixed(520 + 460.0 * (ky - 1 - c) / ky)
                   << "\" width=\"" << fixed(920.0 / kx + 0.05) << "\" height=\"" << fixed(460.0 / ky + 0.05)
                   << "\" fill=\"" << fill << "\"/>\n";
            }
    }
    os << "<rect x=\"40\" y=\"520\" width=\"920\" height=\"460\" fill=\"none\" stroke=\"#333\"/>\n</g>\n";

    os << "<g id=\"forest\" stroke=\"#7d3c98\" stroke-width=\"1.5\">\n";
    for (const AxisSegment& s : sc.forest)
        os << "<line x1=\"" << fixed(ps.sx(s.a.x)) << "\" y1=\"" << fixed(ps.sy(s.a.y)) << "\" x2=\"" << fixed(ps.sx(s.b.x))
           << "\" y2=\"" << fixed(ps.sy(s.b.y)) << "\"/>\n";
    os << "</g>\n";

    os << "<g id=\"matching\">\n";
    if (!sc.matching.empty()) {
        std::vector<std::pair<double, double>> pts;
        for (const ParamPoint& p : sc.matching) pts.push_back({ps.sx(p.x), ps.sy(p.y)});
        os << polyline(pts, "id=\"matching-path\" fill=\"none\" stroke=\"#e67e22\" stroke-width=\"3\"");
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace geofrechet::io
