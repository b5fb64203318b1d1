// SPDX-License-Identifier: Apache-2.0
#include "ecpat/json_io.hpp"

#include <fstream>

namespace ecpat {

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string("missing key '") + key + "'");
    return *it;
}

std::string need_string(const json& j, const char* what) {
    if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    return Rational::parse(need_string(j, "rational"));
}

json p1_to_json(const P1Value& v) { return v.to_string(); }

P1Value p1_from_json(const json& j) {
    if (j.is_number_integer()) return P1Value(Rational(static_cast<long>(j.get<long long>())));
    return P1Value::parse(need_string(j, "projective value"));
}

json curve_to_json(const Curve& e) {
    json j;
    j["a"] = {rational_to_json(e.a1()), rational_to_json(e.a2()), rational_to_json(e.a3()),
              rational_to_json(e.a4()), rational_to_json(e.a6())};
    if (e.label()) j["label"] = *e.label();
    return j;
}

Curve curve_from_json(const json& j) {
    const json& a = need(j, "a");
    if (!a.is_array() || a.size() != 5)
        throw parse_error("curve key 'a' must list the five Weierstrass coefficients");
    std::optional<std::string> label;
    if (j.contains("label")) label = need_string(j["label"], "curve label");
    return Curve(rational_from_json(a[0]), rational_from_json(a[1]), rational_from_json(a[2]),
                 rational_from_json(a[3]), rational_from_json(a[4]), label);
}

json point_to_json(const CurvePoint& p) {
    if (p.is_identity()) return "identity";
    json j;
    j["x"] = rational_to_json(p.x());
    j["y"] = rational_to_json(p.y());
    return j;
}

CurvePoint point_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "identity") return CurvePoint::identity();
        throw parse_error("unknown point literal '" + j.get<std::string>() + "'");
    }
    return CurvePoint(rational_from_json(need(j, "x")), rational_from_json(need(j, "y")));
}

json mobius_to_json(const MobiusMap& m) {
    json j;
    json rows = json::array();
    rows.push_back(json::array({rational_to_json(m.a()), rational_to_json(m.b())}));
    rows.push_back(json::array({rational_to_json(m.c()), rational_to_json(m.d())}));
    j["m"] = rows;
    return j;
}

MobiusMap mobius_from_json(const json& j) {
    const json& m = need(j, "m");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2)
        throw parse_error("mobius key 'm' must be a 2x2 matrix");
    return MobiusMap(rational_from_json(m[0][0]), rational_from_json(m[0][1]),
                     rational_from_json(m[1][0]), rational_from_json(m[1][1]));
}

namespace {

json poly_to_json(const UniPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_to_json(c));
    return arr;
}

UniPoly poly_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be a coefficient array");
    std::vector<Rational> c;
    for (const json& v : j) c.push_back(rational_from_json(v));
    return UniPoly(std::move(c));
}

} // namespace

json ratfunc_to_json(const RationalFunction& f) {
    json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RationalFunction ratfunc_from_json(const json& j) {
    return RationalFunction(poly_from_json(need(j, "num"), "num"),
                            poly_from_json(need(j, "den"), "den"));
}

json coordmap_to_json(const CoordinateMap& g) {
    json j;
    j["base"] = g.base() == CoordinateMap::Base::X ? "x" : "y";
    j["post"] = ratfunc_to_json(g.post());
    return j;
}

CoordinateMap coordmap_from_json(const json& j) {
    std::string base = need_string(need(j, "base"), "coordinate base");
    CoordinateMap::Base b;
    if (base == "x")
        b = CoordinateMap::Base::X;
    else if (base == "y")
        b = CoordinateMap::Base::Y;
    else
        throw parse_error("coordinate base must be \"x\" or \"y\"");
    RationalFunction post =
        j.contains("post") ? ratfunc_from_json(j["post"]) : RationalFunction::identity();
    return CoordinateMap(b, std::move(post));
}

json gamma_to_json(const GammaSpec& spec) {
    json j;
    json gens = json::array();
    for (const CurvePoint& g : spec.generators) gens.push_back(point_to_json(g));
    j["generators"] = gens;
    j["include_torsion"] = spec.include_torsion;
    if (spec.declared_rank) j["rank"] = *spec.declared_rank;
    return j;
}

GammaSpec gamma_from_json(const json& j) {
    GammaSpec spec;
    for (const json& g : need(j, "generators")) spec.generators.push_back(point_from_json(g));
    if (j.contains("include_torsion")) spec.include_torsion = j["include_torsion"].get<bool>();
    if (j.contains("rank")) spec.declared_rank = j["rank"].get<int>();
    return spec;
}

json valueset_to_json(const ValueSet& x) {
    json j;
    json vals = json::array();
    for (const P1Value& v : x.values) vals.push_back(p1_to_json(v));
    j["values"] = vals;
    j["provenance"] = x.provenance;
    return j;
}

ValueSet valueset_from_json(const json& j) {
    ValueSet x;
    for (const json& v : need(j, "values")) x.values.insert(p1_from_json(v));
    x.provenance = j.contains("provenance") ? j["provenance"].get<std::string>()
                                            : std::string("explicit list");
    return x;
}

json report_to_json(const PatternReport& r) {
    json j;
    j["kind"] = pattern_kind_name(r.kind);
    j["length"] = r.length;
    json wit = json::array();
    for (const P1Value& v : r.witnesses) wit.push_back(p1_to_json(v));
    j["witnesses"] = wit;
    if (r.parameter) {
        if (std::holds_alternative<Rational>(*r.parameter))
            j["parameter"] = rational_to_json(std::get<Rational>(*r.parameter));
        else
            j["parameter"] = orbit_map_to_json(std::get<OrbitMap>(*r.parameter));
    }
    if (r.implied_constant) j["implied_constant"] = *r.implied_constant;
    if (r.rank) j["rank"] = *r.rank;
    if (r.rank_basis) j["rank_basis"] = *r.rank_basis;
    return j;
}

json branchset_to_json(const BranchSet& b) {
    json j;
    j["locus"] = poly_to_json(b.locus);
    j["contains_infinity"] = b.contains_infinity;
    return j;
}

json verdict_to_json(const HypothesisVerdict& v) {
    json j;
    j["verdict"] = hypothesis_status_name(v.status);
    j["reason"] = v.reason;
    if (v.branch_g) j["branch_g"] = branchset_to_json(*v.branch_g);
    if (v.branch_fg) j["branch_fg"] = branchset_to_json(*v.branch_fg);
    return j;
}

OrbitMap orbit_map_from_json(const json& j) {
    if (j.contains("m")) return mobius_from_json(j);
    if (j.contains("num")) {
        RationalFunction f = ratfunc_from_json(j);
        if (f.is_constant()) throw parse_error("recurrence map must be non-constant");
        return f;
    }
    throw parse_error("map file needs either 'm' or 'num'/'den'");
}

json orbit_map_to_json(const OrbitMap& f) {
    if (std::holds_alternative<MobiusMap>(f)) return mobius_to_json(std::get<MobiusMap>(f));
    return ratfunc_to_json(std::get<RationalFunction>(f));
}

CurveFile curve_file_from_json(const json& j) {
    CurveFile out{curve_from_json(j), std::nullopt, {}};
    if (j.contains("rank")) out.rank = j["rank"].get<int>();
    if (j.contains("generators"))
        for (const json& g : j["generators"]) out.generators.push_back(point_from_json(g));
    return out;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

} // namespace ecpat
