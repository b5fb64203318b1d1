// SPDX-License-Identifier: Apache-2.0
#include "ecpat/verify.hpp"

#include "ecpat/membership.hpp"
#include "ecpat/pattern.hpp"

namespace ecpat {

namespace {

struct Checker {
    const CheckSink& sink;
    size_t count = 0;

    void pass(const std::string& name, json extra = json::object()) {
        extra["check"] = name;
        extra["ok"] = true;
        sink(extra);
        ++count;
    }

    [[noreturn]] void fail(const std::string& name, const std::string& detail,
                           json extra = json::object()) {
        extra["check"] = name;
        extra["ok"] = false;
        extra["detail"] = detail;
        sink(extra);
        throw verification_error(name + ": " + detail);
    }
};

std::set<P1Value> values_from_array(const json& arr, const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + " must be an array");
    std::set<P1Value> out;
    for (const json& v : arr) out.insert(p1_from_json(v));
    return out;
}

std::string set_to_text(const std::set<P1Value>& s) {
    std::string out = "{";
    for (const P1Value& v : s) {
        if (out.size() > 1) out += ", ";
        out += v.to_string();
    }
    return out + "}";
}

} // namespace

VerifySummary verify_certificate(const json& certificate, const CheckSink& sink) {
    Checker check{sink};

    if (!certificate.contains("curve")) throw parse_error("certificate is missing 'curve'");
    Curve e = curve_from_json(certificate["curve"]);
    json curve_extra = json::object();
    if (e.label()) curve_extra["label"] = *e.label();
    check.pass("curve is nonsingular", curve_extra);

    ValueSet ambient;
    ambient.provenance = "certificate values";

    if (certificate.contains("points")) {
        for (const json& pj : certificate["points"]) {
            CurvePoint p = point_from_json(pj);
            std::string name = "point " + p.to_string() + " on curve";
            if (p.is_identity()) {
                check.pass(name);
                continue;
            }
            Rational res = e.equation_residual(p.x(), p.y());
            if (!res.is_zero())
                check.fail(name, "equation residual " + res.to_string(),
                           {{"residual", res.to_string()}});
            check.pass(name);
            ambient.values.insert(P1Value(p.x()));
        }
    }

    if (certificate.contains("x_values")) {
        CoordinateMap g = CoordinateMap::x();
        for (const json& vj : certificate["x_values"]) {
            P1Value v = p1_from_json(vj);
            std::string name = "x-value " + v.to_string() + " is attained";
            auto witness = g_membership(e, g, v);
            if (!witness)
                check.fail(name, "no rational point has this x-coordinate");
            check.pass(name, {{"witness", point_to_json(*witness)}});
            ambient.values.insert(v);
        }
    }

    if (certificate.contains("shift_claims")) {
        for (const json& cj : certificate["shift_claims"]) {
            Rational a = rational_from_json(cj.at("a"));
            std::set<P1Value> claimed = values_from_array(cj.at("set"), "shift set");
            bool exact = cj.value("exact", true);
            ValueSet computed = shift_intersection(ambient, a);
            std::string name = "shift set for a = " + a.to_string();
            if (exact && computed.values != claimed)
                check.fail(name, "computed " + set_to_text(computed.values) + ", claimed " +
                                     set_to_text(claimed));
            if (!exact)
                for (const P1Value& v : claimed)
                    if (!computed.contains(v))
                        check.fail(name, v.to_string() + " is not in the computed shift set");
            check.pass(name, {{"size", computed.size()}});
        }
    }

    if (certificate.contains("scaling_claims")) {
        for (const json& cj : certificate["scaling_claims"]) {
            Rational q = rational_from_json(cj.at("q"));
            bool exclude_fixed = cj.value("exclude_fixed", false);
            std::set<P1Value> claimed = values_from_array(cj.at("set"), "scaling set");
            bool exact = cj.value("exact", true);
            ValueSet computed = scaling_intersection(ambient, q, exclude_fixed);
            std::string name = "scaling set for q = " + q.to_string();
            if (exact && computed.values != claimed)
                check.fail(name, "computed " + set_to_text(computed.values) + ", claimed " +
                                     set_to_text(claimed));
            if (!exact)
                for (const P1Value& v : claimed)
                    if (!computed.contains(v))
                        check.fail(name, v.to_string() + " is not in the computed scaling set");
            check.pass(name, {{"size", computed.size()}});
        }
    }

    if (certificate.contains("orbit_claims")) {
        for (const json& cj : certificate["orbit_claims"]) {
            OrbitMap f = orbit_map_from_json(cj.at("map"));
            std::vector<P1Value> seq;
            for (const json& vj : cj.at("sequence")) seq.push_back(p1_from_json(vj));
            for (size_t i = 0; i + 1 < seq.size(); ++i) {
                P1Value img = orbit_map_apply(f, seq[i]);
                std::string name = "recurrence step F(" + seq[i].to_string() + ") = " +
                                   seq[i + 1].to_string();
                if (!(img == seq[i + 1]))
                    check.fail(name, "F(" + seq[i].to_string() + ") is " + img.to_string());
                check.pass(name);
            }
            for (const P1Value& v : seq) {
                std::string name = "orbit value " + v.to_string() + " is in the value set";
                if (!ambient.contains(v)) check.fail(name, "missing from the certificate values");
                check.pass(name);
            }
            if (cj.contains("expect_longest")) {
                size_t expect = cj["expect_longest"].get<size_t>();
                PatternReport report = longest_orbit(ambient, f);
                std::string name = "longest orbit in the value set";
                if (report.length != expect)
                    check.fail(name, "detector found length " + std::to_string(report.length) +
                                         ", certificate claims " + std::to_string(expect));
                if (expect == seq.size() && report.witnesses != seq)
                    check.fail(name, "detector walked a different orbit");
                check.pass(name, {{"length", report.length}});
            }
        }
    }

    return VerifySummary{check.count};
}

} // namespace ecpat
