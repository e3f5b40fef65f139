#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "geofrechet/convex.hpp"
#include "geofrechet/driver.hpp"
#include "geofrechet/generators.hpp"
#include "geofrechet/io.hpp"
#include "geofrechet/oned.hpp"
#include "geofrechet/oracle.hpp"

using namespace geofrechet;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

// Input rejected before any computation.
struct Malformed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    std::string text;
    Json json;
};

Loaded load(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Malformed("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return {text, io::parse(text)};
    } catch (const Error& e) {
        throw Malformed(e.what());
    }
}

template <class F>
auto parsed(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Malformed(e.what());
    }
}

Curve1D curve_r(const std::vector<double>& v) { return Curve1D(v, Side::left); }
Curve1D curve_b(const std::vector<double>& v) { return Curve1D(v, Side::right); }

class Report {
public:
    Report(std::string command, const Loaded* in) : start_(std::chrono::steady_clock::now()) {
        j_["command"] = std::move(command);
        if (in) j_["input"] = io::digest(in->text);
        j_["params"] = Json::object();
    }
    Json& operator[](const char* key) { return j_[key]; }
    Json& params() { return j_["params"]; }
    void print() {
        j_["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        std::cout << io::dump(j_) << "\n";
    }

private:
    Json j_ = Json::object();
    std::chrono::steady_clock::time_point start_;
};

int run_compute(const std::string& file, double eps) {
    const Loaded in = load(file);
    const CurvePair cp = parsed([&] { return io::curves_from_json(in.json); });
    Report rep("compute", &in);
    rep.params()["epsilon"] = eps;
    try {
        const PolygonInstance inst = build_instance(cp.R, cp.B);
        const Prepared prep = prepare(inst);
        const Optimum o = approx_optimize(prep, eps);
        rep["distance"] = o.value;
        rep["hausdorff"] = o.hausdorff;
        rep["decisions"] = o.decisions;
        DecisionContext ctx;
        if (o.value > 0) approx_decide(prep, o.value / (1 + o.inner_epsilon), o.inner_epsilon, &ctx);
        int far = 0;
        for (const Slab& s : ctx.slabs) far += s.kind == SlabKind::far;
        rep["slabs"] = static_cast<int>(ctx.slabs.size());
        rep["far_slabs"] = far;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::degenerate) throw;
        rep["distance"] = strip_distance(cp.R, cp.B);
        rep["degenerate"] = true;
    }
    rep.print();
    return kOk;
}

int run_decide(const std::string& file, double delta, double eps) {
    const Loaded in = load(file);
    const CurvePair cp = parsed([&] { return io::curves_from_json(in.json); });
    Report rep("decide", &in);
    rep.params()["delta"] = delta;
    rep.params()["epsilon"] = eps;
    const bool yes = approx_decide(cp.R, cp.B, delta, eps);
    rep["decision"] = yes;
    rep["answer"] = yes ? "<= (1+eps)*delta" : "> delta";
    rep.print();
    return kOk;
}

int run_convex(const std::string& file) {
    const Loaded in = load(file);
    const CurvePair cp = parsed([&] { return io::curves_from_json(in.json); });
    Report rep("convex", &in);
    const PolygonInstance inst = build_instance(cp.R, cp.B);
    const MatchingPath path = convex_frechet(inst);
    rep["distance"] = path.cost;
    rep["path"] = io::points_to_json(path.waypoints);
    rep.print();
    return kOk;
}

int run_oned(const std::string& file) {
    const Loaded in = load(file);
    const io::Input1D v = parsed([&] { return io::oned_from_json(in.json); });
    Report rep("oned", &in);
    const Curve1D r = curve_r(v.values.R), b = curve_b(v.values.B);
    const MatchingPath path = frechet_matching_1d(r, b);
    rep["distance"] = path.cost;
    rep["path"] = io::points_to_json(path.waypoints);
    rep.print();
    return kOk;
}

int run_propagate(const std::string& file, std::optional<double> delta) {
    const Loaded in = load(file);
    const io::Input1D v = parsed([&] { return io::oned_from_json(in.json); });
    if (!delta) delta = v.delta;
    if (!delta) throw Malformed("propagate needs --delta or a \"delta\" key");
    Report rep("propagate", &in);
    rep.params()["delta"] = *delta;
    const Curve1D r = curve_r(v.values.R), b = curve_b(v.values.B);
    for (const auto* pts : {&v.S, &v.E})
        for (const GridPoint& p : *pts) {
            if (p.i < 1 || p.i > r.size() || p.j < 1 || p.j > b.size())
                throw Error(ErrorKind::out_of_range, "grid point outside the curves");
            if (r.mag(p.i) + b.mag(p.j) > *delta) throw Error(ErrorKind::invalid_input, "grid point outside the free space");
        }
    const std::vector<GridPoint> out = propagate_reachability(r, b, *delta, v.S, v.E);
    rep["reachable"] = io::points_to_json(out);
    rep["count"] = static_cast<int>(out.size());
    rep.print();
    return kOk;
}

int run_oracle(const std::string& file, const std::string& metric, std::optional<double> delta, double tol) {
    const Loaded in = load(file);
    Report rep("oracle", &in);
    rep.params()["metric"] = metric;
    std::unique_ptr<FreeSpaceModel> model;
    std::optional<PolygonInstance> inst;
    std::optional<Curve1D> r, b;
    if (metric == "oned") {
        const io::Input1D v = parsed([&] { return io::oned_from_json(in.json); });
        r.emplace(curve_r(v.values.R));
        b.emplace(curve_b(v.values.B));
        model = oned_model(*r, *b);
    } else {
        const CurvePair cp = parsed([&] { return io::curves_from_json(in.json); });
        if (metric == "euclidean") {
            model = euclidean_model(cp.R, cp.B);
        } else {
            inst.emplace(build_instance(cp.R, cp.B));
            model = geodesic_model(*inst);
        }
    }
    if (delta) {
        rep.params()["delta"] = *delta;
        rep["decision"] = freespace_decide(*model, *delta);
    } else {
        rep.params()["tolerance"] = tol;
        rep["distance"] = frechet_bisect(*model, tol);
    }
    rep.print();
    return kOk;
}

int run_gen(const std::string& kind, int n, int m, std::uint64_t seed, const std::string& out) {
    Json j;
    if (kind == "convex") j = io::curves_to_json(gen_convex(n, seed));
    else if (kind == "pocket") j = io::curves_to_json(gen_pocket(n, seed));
    else if (kind == "star") j = io::curves_to_json(gen_star(n, seed));
    else if (kind == "comb") j = io::oned_to_json(gen_comb1d(n, m > 0 ? m : n));
    else if (kind == "random1d") j = io::oned_to_json(gen_random1d(n, m > 0 ? m : n, seed));
    else throw Malformed("unknown kind " + kind);
    j["kind"] = kind;
    j["seed"] = seed;
    const std::string text = io::dump(j) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + out);
        f << text;
    }
    return kOk;
}

int run_render(const std::string& file, const std::string& svg, std::optional<double> delta, double eps) {
    const Loaded in = load(file);
    const bool polygon = parsed([&] { return io::is_polygon_input(in.json); });
    Report rep("render", &in);
    io::Scene scene;
    std::optional<PolygonInstance> inst;
    std::optional<Curve1D> r, b;
    if (polygon) {
        const CurvePair cp = parsed([&] { return io::curves_from_json(in.json); });
        inst.emplace(build_instance(cp.R, cp.B));
        const Prepared prep = prepare(*inst);
        const Optimum o = approx_optimize(prep, eps);
        scene.inst = &*inst;
        scene.delta = delta ? *delta : o.value;
        DecisionContext ctx;
        scene.matching.push_back({1.0, 1.0});
        if (approx_decide(prep, scene.delta, eps, &ctx))
            for (const TransitPoint& t : ctx.chain) scene.matching.push_back(t.p);
        if (scene.matching.back().x != inst->n() || scene.matching.back().y != inst->m())
            scene.matching.push_back({static_cast<double>(inst->n()), static_cast<double>(inst->m())});
        rep["distance"] = o.value;
    } else {
        const io::Input1D v = parsed([&] { return io::oned_from_json(in.json); });
        r.emplace(curve_r(v.values.R));
        b.emplace(curve_b(v.values.B));
        const MatchingPath path = frechet_matching_1d(*r, *b);
        scene.r = &*r;
        scene.b = &*b;
        scene.delta = delta ? *delta : v.delta ? *v.delta : path.cost;
        scene.matching = path.waypoints;
        std::vector<GridPoint> seeds;
        for (const GridPoint& p : v.S.empty() ? std::vector<GridPoint>{{1, 1}} : v.S)
            if (p.i >= 1 && p.i <= r->size() && p.j >= 1 && p.j <= b->size() && r->mag(p.i) + b->mag(p.j) <= scene.delta)
                seeds.push_back(p);
        if (!seeds.empty())
            scene.forest = build_greedy_forest(*r, *b, scene.delta, seeds, Orientation::horizontal, true).segments();
        rep["distance"] = path.cost;
    }
    rep.params()["delta"] = scene.delta;
    std::ofstream f(svg, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + svg);
    f << io::render_svg(scene);
    rep["svg"] = svg;
    rep.print();
    return kOk;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("GEOFRECHET_SEED");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw Malformed("GEOFRECHET_SEED is not an integer");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate geodesic Frechet distance between two curves bounding a simple polygon"};
    app.require_subcommand(1);

    std::string file, metric = "geodesic", kind, svg, out;
    double eps = 0.1, delta = 0.0, tol = 1e-9;
    std::optional<double> opt_delta;
    int n = 20, m = 0;
    std::uint64_t seed = 1;

    auto* compute = app.add_subcommand("compute", "(1+eps)-approximate geodesic Frechet distance");
    compute->add_option("--epsilon", eps)->check(CLI::PositiveNumber);
    compute->add_option("file", file)->required();

    auto* decide = app.add_subcommand("decide", "approximate decision at one delta");
    decide->add_option("--delta", delta)->required()->check(CLI::NonNegativeNumber);
    decide->add_option("--epsilon", eps)->check(CLI::PositiveNumber);
    decide->add_option("file", file)->required();

    auto* convex = app.add_subcommand("convex", "exact distance inside a convex polygon");
    convex->add_option("file", file)->required();

    auto* oned = app.add_subcommand("oned", "exact distance of separated 1D curves");
    oned->add_option("file", file)->required();

    auto* propagate = app.add_subcommand("propagate", "reachable exits E from entrances S in 1D");
    propagate->add_option("--delta", opt_delta);
    propagate->add_option("file", file)->required();

    auto* oracle = app.add_subcommand("oracle", "free-space oracle distance or decision");
    oracle->add_option("--metric", metric)->check(CLI::IsMember({"euclidean", "geodesic", "oned"}));
    oracle->add_option("--delta", opt_delta);
    oracle->add_option("--tol", tol)->check(CLI::PositiveNumber);
    oracle->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"convex", "pocket", "star", "comb", "random1d"}));
    gen->add_option("--n", n)->check(CLI::Range(1, 100000000));
    gen->add_option("--m", m)->check(CLI::Range(0, 100000000));
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    auto* render = app.add_subcommand("render", "SVG of the instance, free space and matching");
    render->add_option("--svg", svg)->required();
    render->add_option("--delta", opt_delta);
    render->add_option("--epsilon", eps)->check(CLI::PositiveNumber);
    render->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*compute) return run_compute(file, eps);
        if (*decide) return run_decide(file, delta, eps);
        if (*convex) return run_convex(file);
        if (*oned) return run_oned(file);
        if (*propagate) return run_propagate(file, opt_delta);
        if (*oracle) return run_oracle(file, metric, opt_delta, tol);
        if (*gen) return run_gen(kind, n, m, seed_from_env(seed), out);
        if (*render) return run_render(file, svg, opt_delta, eps);
    } catch (const Malformed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kMalformed;
}
