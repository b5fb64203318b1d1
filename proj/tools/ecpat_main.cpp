// SPDX-License-Identifier: Apache-2.0
//
// ecpat: exact search and verification of patterns (progressions, orbit
// segments, shift sets) in coordinate images of rational points on
// elliptic curves over Q.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "ecpat/json_io.hpp"
#include "ecpat/lmfdb.hpp"
#include "ecpat/membership.hpp"
#include "ecpat/pattern.hpp"
#include "ecpat/verify.hpp"

namespace {

using namespace ecpat;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitNetwork = 3;

struct OutputTarget {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw parse_error("cannot open output file '" + path + "'");
        stream = file.get();
    }
    void line(const json& j) { *stream << j.dump() << "\n"; }
};

struct SideOptions {
    std::string curve_file;
    std::string gamma_file;
    std::string g_file;
    long bound = 2;
    std::vector<long> naive;
};

struct SideData {
    std::optional<Curve> curve;
    std::optional<CoordinateMap> g;
    std::set<CurvePoint> points;
    ValueSet values;
    std::optional<int> rank;
    std::string rank_basis;
};

SideData build_side(const SideOptions& opt, bool allow_infinity) {
    if (opt.curve_file.empty()) throw parse_error("a curve file is required");
    CurveFile cf = curve_file_from_json(load_json_file(opt.curve_file));
    SideData side;
    side.curve = cf.curve;
    side.g = opt.g_file.empty() ? CoordinateMap::x()
                                : coordmap_from_json(load_json_file(opt.g_file));

    if (!opt.gamma_file.empty()) {
        GammaSpec spec = gamma_from_json(load_json_file(opt.gamma_file));
        side.points = enumerate_gamma(*side.curve, spec, opt.bound);
        if (spec.declared_rank) {
            side.rank = *spec.declared_rank;
            side.rank_basis = "declared";
        } else {
            side.rank = static_cast<int>(spec.generators.size());
            side.rank_basis = "generator-count";
        }
    } else if (opt.naive.size() == 2) {
        side.points = naive_point_search(*side.curve, opt.naive[0], opt.naive[1]);
        if (cf.rank) {
            side.rank = *cf.rank;
            side.rank_basis = "declared";
        }
    } else {
        throw parse_error("choose a point source: --gamma FILE (with --bound) or --naive NUM DEN");
    }
    side.values = image_set(*side.curve, *side.g, side.points, allow_infinity);
    return side;
}

int run_verify(const std::string& target, OutputTarget& out) {
    json certificate;
    std::string name = target;
    if (const std::string* text = fixture_text(target)) {
        certificate = parse_json_text(*text);
    } else {
        certificate = load_json_file(target);
    }
    try {
        VerifySummary summary = verify_certificate(certificate, [&](const json& j) { out.line(j); });
        out.line(json{{"result", "PASS"}, {"certificate", name}, {"checks", summary.checks}});
        return kExitOk;
    } catch (const verification_error& e) {
        out.line(json{{"result", "FAIL"}, {"certificate", name}, {"error", e.what()}});
        return kExitVerification;
    }
}

int run_search(const std::string& kind, const SideOptions& side1, const SideOptions& side2,
               bool allow_infinity, std::optional<int> rank_flag, const std::string& a_text,
               const std::string& q_text, bool exclude_fixed, const std::string& map_file,
               OutputTarget& out) {
    SideData side = build_side(side1, allow_infinity);

    PatternReport report;
    const ValueSet& x = side.values;
    if (kind == "ap") {
        report = longest_ap(x);
    } else if (kind == "gp") {
        report = longest_gp(x);
    } else if (kind == "orbit") {
        if (map_file.empty()) throw parse_error("orbit search needs --map FILE");
        report = longest_orbit(x, orbit_map_from_json(load_json_file(map_file)));
    } else if (kind == "shift") {
        if (a_text.empty()) throw parse_error("shift search needs --a RATIONAL");
        Rational a = Rational::parse(a_text);
        ValueSet s = shift_intersection(x, a);
        report.kind = PatternKind::AdditiveShift;
        report.length = s.size();
        report.witnesses.assign(s.values.begin(), s.values.end());
        report.parameter = a;
    } else if (kind == "scale") {
        if (q_text.empty()) throw parse_error("scaling search needs --q RATIONAL");
        Rational q = Rational::parse(q_text);
        ValueSet s = scaling_intersection(x, q, exclude_fixed);
        report.kind = PatternKind::MultiplicativeShift;
        report.length = s.size();
        report.witnesses.assign(s.values.begin(), s.values.end());
        report.parameter = q;
    } else if (kind == "intersect") {
        SideOptions other = side2;
        if (other.curve_file.empty()) other.curve_file = side1.curve_file;
        SideData rhs = build_side(other, allow_infinity);
        ValueSet s = intersect_images(*side.curve, *side.g, side.points, *rhs.curve, *rhs.g,
                                      rhs.points, allow_infinity);
        report.kind = PatternKind::Intersection;
        report.length = s.size();
        report.witnesses.assign(s.values.begin(), s.values.end());
    } else {
        throw parse_error("unknown pattern kind '" + kind + "'");
    }

    std::optional<int> rank = rank_flag;
    std::string basis = "declared";
    if (!rank && side.rank) {
        rank = side.rank;
        basis = side.rank_basis;
    }
    if (rank && report.length >= 1) {
        report.rank = *rank;
        report.rank_basis = basis;
        report.implied_constant = implied_constant(static_cast<long>(report.length), *rank);
    }
    out.line(report_to_json(report));
    return kExitOk;
}

int run_enumerate(const SideOptions& side1, bool allow_infinity, OutputTarget& out) {
    SideData side = build_side(side1, allow_infinity);
    json points = json::array();
    for (const CurvePoint& p : side.points) points.push_back(point_to_json(p));
    out.line(json{{"points", points}, {"values", valueset_to_json(side.values)}});
    return kExitOk;
}

int run_check_hypothesis(const std::string& curve_file, const std::string& g_file,
                         const std::string& map_file, OutputTarget& out) {
    if (curve_file.empty()) throw parse_error("a curve file is required");
    if (map_file.empty()) throw parse_error("hypothesis check needs --map FILE");
    CurveFile cf = curve_file_from_json(load_json_file(curve_file));
    CoordinateMap g =
        g_file.empty() ? CoordinateMap::x() : coordmap_from_json(load_json_file(g_file));
    OrbitMap f = orbit_map_from_json(load_json_file(map_file));
    HypothesisVerdict verdict = check_pattern_hypothesis(cf.curve, g, f);
    out.line(verdict_to_json(verdict));
    return kExitOk;
}

int run_fetch(const std::string& label, const std::string& url, OutputTarget& out) {
    json curve_file = url.empty() ? lmfdb_fetch_curve(label) : lmfdb_fetch_curve(label, url);
    out.line(curve_file);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern search on elliptic-curve value sets"};
    app.require_subcommand(1);

    OutputTarget out;
    std::string output_path;
    app.add_option("--output", output_path, "write results to this file instead of stdout");

    // verify
    std::string verify_target;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "verify a certificate (a bundled fixture name or a file)");
    cmd_verify->add_option("certificate", verify_target, "fixture name or JSON file")->required();

    // search
    std::string kind, a_text, q_text, map_file;
    SideOptions side1, side2;
    bool allow_infinity = false, exclude_fixed = false;
    int rank_flag = -1;
    CLI::App* cmd_search = app.add_subcommand("search", "run a pattern detector on a value set");
    cmd_search->add_option("kind", kind, "ap | gp | orbit | shift | scale | intersect")
        ->required();
    cmd_search->add_option("--curve", side1.curve_file, "curve JSON file");
    cmd_search->add_option("--gamma", side1.gamma_file, "generator spec JSON file");
    cmd_search->add_option("--bound", side1.bound, "coefficient bound for --gamma enumeration");
    cmd_search->add_option("--naive", side1.naive, "numerator and denominator bounds")
        ->expected(2);
    cmd_search->add_option("--g", side1.g_file, "coordinate map JSON file (default: x)");
    cmd_search->add_option("--map", map_file, "recurrence map JSON file (orbit)");
    cmd_search->add_option("--a", a_text, "additive shift (shift)");
    cmd_search->add_option("--q", q_text, "scaling ratio (scale)");
    cmd_search->add_flag("--exclude-fixed", exclude_fixed, "drop 0 from scaling shift sets");
    cmd_search->add_flag("--allow-infinity", allow_infinity, "keep infinity in value sets");
    cmd_search->add_option("--rank", rank_flag, "rank for the implied-constant report");
    cmd_search->add_option("--curve2", side2.curve_file, "second curve (intersect)");
    cmd_search->add_option("--gamma2", side2.gamma_file, "second generator spec (intersect)");
    cmd_search->add_option("--bound2", side2.bound, "second coefficient bound (intersect)");
    cmd_search->add_option("--naive2", side2.naive, "second search bounds (intersect)")
        ->expected(2);
    cmd_search->add_option("--g2", side2.g_file, "second coordinate map (intersect)");

    // enumerate
    SideOptions en_side;
    bool en_allow_infinity = false;
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "materialize a point set and its value set");
    cmd_enumerate->add_option("--curve", en_side.curve_file, "curve JSON file");
    cmd_enumerate->add_option("--gamma", en_side.gamma_file, "generator spec JSON file");
    cmd_enumerate->add_option("--bound", en_side.bound, "coefficient bound");
    cmd_enumerate->add_option("--naive", en_side.naive, "numerator and denominator bounds")
        ->expected(2);
    cmd_enumerate->add_option("--g", en_side.g_file, "coordinate map JSON file (default: x)");
    cmd_enumerate->add_flag("--allow-infinity", en_allow_infinity, "keep infinity");

    // check-hypothesis
    std::string hy_curve, hy_g, hy_map;
    CLI::App* cmd_hypothesis =
        app.add_subcommand("check-hypothesis", "branch-value hypothesis for g versus F o g");
    cmd_hypothesis->add_option("--curve", hy_curve, "curve JSON file");
    cmd_hypothesis->add_option("--g", hy_g, "coordinate map JSON file (default: x)");
    cmd_hypothesis->add_option("--map", hy_map, "recurrence map JSON file");

    // fetch-lmfdb
    std::string fetch_label, fetch_url;
    CLI::App* cmd_fetch =
        app.add_subcommand("fetch-lmfdb", "fetch a curve file from the LMFDB API");
    cmd_fetch->add_option("label", fetch_label, "curve label, e.g. 5077.a1")->required();
    cmd_fetch->add_option("--url", fetch_url, "API base URL override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        out.open(output_path);
        if (cmd_verify->parsed()) return run_verify(verify_target, out);
        if (cmd_search->parsed())
            return run_search(kind, side1, side2, allow_infinity,
                              rank_flag >= 0 ? std::optional<int>(rank_flag) : std::nullopt,
                              a_text, q_text, exclude_fixed, map_file, out);
        if (cmd_enumerate->parsed()) return run_enumerate(en_side, en_allow_infinity, out);
        if (cmd_hypothesis->parsed()) return run_check_hypothesis(hy_curve, hy_g, hy_map, out);
        if (cmd_fetch->parsed()) return run_fetch(fetch_label, fetch_url, out);
        return kExitParse;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const singular_curve_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const singular_map_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const unknown_label_error& e) {
        std::cerr << "unknown label: " << e.what() << "\n";
        return kExitParse;
    } catch (const network_error& e) {
        std::cerr << "network error: " << e.what() << "\n";
        return kExitNetwork;
    } catch (const schema_error& e) {
        std::cerr << "schema mismatch: " << e.what() << "\n";
        return kExitNetwork;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
