#include "quatmob/cli.hpp"

#include <array>

#include <CLI11.hpp>

#include "quatmob/hypgeo.hpp"
#include "quatmob/json_io.hpp"
#include "quatmob/kobayashi.hpp"
#include "quatmob/selftest.hpp"

namespace quatmob::cli {

namespace {

using json::Json;

Json tags_json(const std::vector<GroupTag>& tags) {
    Json out = Json::array();
    for (GroupTag t : tags) out.push_back(std::string(to_string(t)));
    return out;
}

Quaternion finite_arg(const std::string& text) {
    const ExtQuaternion q = json::decode_ext_quaternion(json::parse(text));
    if (q.is_infinite()) {
        throw Error(ErrorCode::OutOfDomain, "a finite quaternion is required here");
    }
    return q.finite();
}

ExtQuaternion ext_arg(const std::string& text) { return json::decode_ext_quaternion(json::parse(text)); }

Mat2H mat_arg(const std::string& text) { return json::decode_mat2h(json::parse(text)); }

struct Options {
    double tol = 1e-9;
    std::uint64_t seed = 1;

    std::string mat;
    std::array<std::string, 4> points;
    std::string point;
    std::string tau;

    bool disc = false;
    bool halfspace = false;
    bool inverse = false;
    bool csv = false;
    int samples = 64;
    int grid = 20;
    int iters = 1000;
    std::optional<double> classify_tol;
    std::optional<std::uint64_t> selftest_seed;
};

void require_model(const Options& o) {
    if (o.disc == o.halfspace) {
        throw Error(ErrorCode::ParseError, "exactly one of --disc and --halfspace is required");
    }
}

Json geodesic_json(const Options& o, std::ostream& out, bool& wrote_csv) {
    const Quaternion q1 = finite_arg(o.points.at(0));
    const Quaternion q2 = finite_arg(o.points.at(1));
    std::vector<Quaternion> samples;
    Json doc = Json::object();
    if (o.disc) {
        const GeodesicDisc g = geodesic_disc(q1, q2);
        samples = geodesic_sample(q1, q2, o.samples);
        doc["kind"] = std::string(to_string(g.kind));
        doc["ends"] = Json::array({json::encode(g.q3), json::encode(g.q4)});
    } else {
        const GeodesicHalfspace g = geodesic_halfspace(q1, q2);
        for (const Quaternion& p :
             geodesic_sample(cayley_inv(q1).finite(), cayley_inv(q2).finite(), o.samples)) {
            samples.push_back(cayley(p).finite());
        }
        samples.front() = q1;
        samples.back() = q2;
        doc["kind"] = std::string(to_string(g.kind));
        doc["ends"] = Json::array({json::encode(g.q3), json::encode(g.q4)});
    }
    if (o.csv) {
        out << "w,x,y,z\n";
        for (const Quaternion& p : samples) {
            out << json::format_number(p.w) << ',' << json::format_number(p.x) << ','
                << json::format_number(p.y) << ',' << json::format_number(p.z) << '\n';
        }
        wrote_csv = true;
        return {};
    }
    Json pts = Json::array();
    for (const Quaternion& p : samples) pts.push_back(json::encode(p));
    doc["samples"] = pts;
    return doc;
}

Json dispatch(const CLI::App& app, const Options& o, std::ostream& out, bool& wrote_csv, bool& failed) {
    const auto used = [&](const char* name) { return app.got_subcommand(name); };

    if (used("det")) {
        return {{"det", det_h(mat_arg(o.mat))}};
    }
    if (used("inv")) {
        const Mat2H m = mat_arg(o.mat);
        if (is_numerically_singular(m)) {
            throw Error(ErrorCode::Singular, "matrix is not invertible");
        }
        return {{"inverse", json::encode(inverse(m))}};
    }
    if (used("normalize")) {
        return {{"matrix", json::encode(normalize_det(mat_arg(o.mat)))}};
    }
    if (used("classify")) {
        const Mat2H m = mat_arg(o.mat);
        return {{"tags", tags_json(classify(m, o.classify_tol.value_or(o.tol)))}, {"det", det_h(m)}};
    }
    if (used("apply")) {
        return {{"image", json::encode(apply_matrix(mat_arg(o.mat), ext_arg(o.point)))}};
    }
    if (used("decompose")) {
        Json gens = Json::array();
        for (const Generator& g : decompose_generators(FLT(mat_arg(o.mat)))) gens.push_back(json::encode(g));
        return {{"generators", gens}};
    }
    if (used("canonical")) {
        return json::encode(to_canonical_disc(mat_arg(o.mat), o.tol));
    }
    if (used("cross-ratio")) {
        return json::encode(cross_ratio(ext_arg(o.points.at(0)), ext_arg(o.points.at(1)),
                                        ext_arg(o.points.at(2)), ext_arg(o.points.at(3))));
    }
    if (used("concyclic")) {
        Quaternion p[4];
        for (int i = 0; i < 4; ++i) p[i] = finite_arg(o.points.at(static_cast<std::size_t>(i)));
        const Quaternion cr = cross_ratio(p[0], p[1], p[2], p[3]).finite();
        return {{"concyclic", is_concyclic(p[0], p[1], p[2], p[3], o.tol)}, {"cross_ratio", json::encode(cr)}};
    }
    if (used("distance")) {
        require_model(o);
        const Quaternion q1 = finite_arg(o.points.at(0));
        const Quaternion q2 = finite_arg(o.points.at(1));
        return {{"distance", o.disc ? distance_disc(q1, q2) : distance_halfspace(q1, q2)}};
    }
    if (used("geodesic")) {
        require_model(o);
        return geodesic_json(o, out, wrote_csv);
    }
    if (used("cayley")) {
        const ExtQuaternion q = ext_arg(o.point);
        return {{"image", json::encode(o.inverse ? cayley_inv(q) : cayley(q))}};
    }
    if (used("metric")) {
        require_model(o);
        const Quaternion q = finite_arg(o.point);
        const Quaternion tau = finite_arg(o.tau);
        return {{"metric", o.disc ? metric_disc(q, tau) : metric_halfspace(q, tau)}};
    }
    if (used("kobayashi-witness")) {
        const WitnessReport r = non_isometry_witness(o.grid);
        const WitnessPoint& w = r.witness;
        return {{"witness", {{"alpha", w.alpha}, {"beta", w.beta}, {"Q", w.poincare}, {"C", w.kobayashi}, {"gap", w.gap}}},
                {"grid_max_gap", r.grid_max_gap}};
    }
    if (used("selftest")) {
        Json suites = Json::array();
        bool all = true;
        for (const SuiteResult& s : run_selftest(o.selftest_seed.value_or(o.seed), o.iters)) {
            all = all && s.passed;
            suites.push_back({{"name", s.name},
                              {"iterations", s.iterations},
                              {"max_error", s.max_error},
                              {"tolerance", s.tolerance},
                              {"passed", s.passed}});
        }
        failed = !all;
        return {{"passed", all}, {"suites", suites}};
    }
    throw Error(ErrorCode::ParseError, "no subcommand given");
}

void write_error(std::ostream& out, std::string_view code, const std::string& message) {
    out << Json{{"error", std::string(code)}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quaternionic Moebius geometry", "quatmob"};
    app.require_subcommand(1);
    app.add_option("--tol", o.tol, "absolute and relative tolerance")->envname("QUATMOB_TOL")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "random seed")->envname("QUATMOB_SEED");

    const auto mat_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("mat", o.mat, "matrix [[a],[b],[c],[d]]")->required();
        return sub;
    };
    mat_cmd("det", "Dieudonne determinant");
    mat_cmd("inv", "matrix inverse");
    mat_cmd("normalize", "rescale to determinant 1");
    mat_cmd("classify", "group membership tags")->add_option("--tol", o.classify_tol, "membership tolerance");
    mat_cmd("apply", "evaluate the fractional linear map")->add_option("q", o.point, "quaternion or \"inf\"")->required();
    mat_cmd("decompose", "factor into generators");
    mat_cmd("canonical", "canonical disc form of an Sp(1,1) matrix");

    // One scalar positional per point: vector options would split "[w,x,y,z]".
    const auto add_points = [&](CLI::App* sub, std::size_t n) {
        static const char* names[] = {"q1", "q2", "q3", "q4"};
        for (std::size_t i = 0; i < n; ++i) sub->add_option(names[i], o.points[i])->required();
    };
    auto* cr = app.add_subcommand("cross-ratio", "cross-ratio of four points");
    add_points(cr, 4);
    auto* cc = app.add_subcommand("concyclic", "test whether four points lie on one circle");
    add_points(cc, 4);

    const auto model_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_flag("--disc", o.disc, "unit ball model");
        sub->add_flag("--halfspace", o.halfspace, "right half-space model");
        return sub;
    };
    add_points(model_cmd("distance", "hyperbolic distance"), 2);
    auto* geo = model_cmd("geodesic", "geodesic ends and samples");
    add_points(geo, 2);
    geo->add_option("--samples", o.samples, "number of samples")->check(CLI::Range(2, 10000000));
    geo->add_flag("--csv", o.csv, "emit samples as CSV");
    auto* metric = model_cmd("metric", "differential metric at q on tangent tau");
    metric->add_option("q", o.point)->required();
    metric->add_option("tau", o.tau)->required();

    auto* cay = app.add_subcommand("cayley", "Cayley transform ball -> half-space");
    cay->add_flag("--inverse", o.inverse, "half-space -> ball");
    cay->add_option("q", o.point)->required();

    app.add_subcommand("kobayashi-witness", "Poincare vs Kobayashi comparison")
        ->add_option("--grid", o.grid, "samples per axis")
        ->check(CLI::Range(1, 100000));
    auto* st = app.add_subcommand("selftest", "randomized invariant suites");
    st->add_option("--seed", o.selftest_seed, "random seed");
    st->add_option("--iters", o.iters, "samples per suite")->check(CLI::Range(1, 100000000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        write_error(out, to_string(ErrorCode::ParseError), e.what());
        return kParseError;
    }

    try {
        set_default_tolerance(Tolerance{o.tol, o.tol});
        bool wrote_csv = false;
        bool failed = false;
        const Json doc = dispatch(app, o, out, wrote_csv, failed);
        if (!wrote_csv) {
            out << json::round_all(doc).dump() << '\n';
        }
        return failed ? kDomainError : kOk;
    } catch (const Error& e) {
        err << e.what() << '\n';
        write_error(out, to_string(e.code()), e.what());
        return e.code() == ErrorCode::ParseError ? kParseError : kDomainError;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        write_error(out, to_string(ErrorCode::InternalNumericError), e.what());
        return kDomainError;
    }
}

}  // namespace quatmob::cli
