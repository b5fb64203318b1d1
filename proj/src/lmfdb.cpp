// SPDX-License-Identifier: Apache-2.0
#include "ecpat/lmfdb.hpp"

#include <cctype>
#include <regex>

#include <httplib.h>

namespace ecpat {

bool lmfdb_label_valid(const std::string& label) {
    // e.g. "5077.a1": conductor, isogeny class letters, curve number
    static const std::regex pattern(R"(\d+\.[a-z]+\d+)");
    return std::regex_match(label, pattern);
}

namespace {

Rational rational_from_api(const json& v, const char* what) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw schema_error(std::string("unexpected value for ") + what);
}

// LMFDB publishes Mordell-Weil generators as projective triples.
std::optional<CurvePoint> point_from_api(const json& g) {
    if (!g.is_array() || g.size() < 2 || g.size() > 3) return std::nullopt;
    try {
        Rational x = rational_from_api(g[0], "generator");
        Rational y = rational_from_api(g[1], "generator");
        if (g.size() == 3) {
            Rational z = rational_from_api(g[2], "generator");
            if (z.is_zero()) return std::nullopt;  // identity, nothing to record
            x /= z;
            y /= z;
        }
        return CurvePoint(x, y);
    } catch (const error&) {
        return std::nullopt;
    }
}

} // namespace

json lmfdb_curve_from_api(const std::string& label, const json& curvedata_response,
                          const json* mwbsd_response) {
    if (!curvedata_response.contains("data") || !curvedata_response["data"].is_array())
        throw schema_error("curve data response has no 'data' array");
    const json& data = curvedata_response["data"];
    if (data.empty()) throw unknown_label_error("no curve with label '" + label + "'");
    const json& row = data[0];
    if (!row.contains("ainvs") || !row["ainvs"].is_array() || row["ainvs"].size() != 5)
        throw schema_error("curve record has no usable 'ainvs'");

    json out;
    json a = json::array();
    for (const json& c : row["ainvs"]) a.push_back(rational_from_api(c, "ainvs").to_string());
    out["a"] = a;
    out["label"] = label;
    if (row.contains("rank") && row["rank"].is_number_integer())
        out["rank"] = row["rank"].get<int>();

    if (mwbsd_response && mwbsd_response->contains("data") &&
        (*mwbsd_response)["data"].is_array() && !(*mwbsd_response)["data"].empty()) {
        const json& mw = (*mwbsd_response)["data"][0];
        if (mw.contains("gens") && mw["gens"].is_array()) {
            json gens = json::array();
            for (const json& g : mw["gens"])
                if (auto p = point_from_api(g)) gens.push_back(point_to_json(*p));
            if (!gens.empty()) out["generators"] = gens;
        }
        if (!out.contains("rank") && mw.contains("rank") && mw["rank"].is_number_integer())
            out["rank"] = mw["rank"].get<int>();
    }
    return out;
}

namespace {

json get_json(httplib::Client& client, const std::string& path) {
    auto res = client.Get(path);
    if (!res) throw network_error("request failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw network_error("unexpected HTTP status " + std::to_string(res->status));
    return parse_json_text(res->body);
}

} // namespace

json lmfdb_fetch_curve(const std::string& label, const std::string& base_url) {
    if (!lmfdb_label_valid(label)) throw unknown_label_error("malformed label '" + label + "'");
    httplib::Client client(base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);

    std::string query = "?lmfdb_label=" + label + "&_format=json";
    json curvedata = get_json(client, "/api/ec_curvedata/" + query);
    std::optional<json> mwbsd;
    try {
        mwbsd = get_json(client, "/api/ec_mwbsd/" + query);
    } catch (const error&) {
        // generators are optional extras; ignore a failed second request
    }
    return lmfdb_curve_from_api(label, curvedata, mwbsd ? &*mwbsd : nullptr);
}

} // namespace ecpat
