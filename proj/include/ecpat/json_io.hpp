// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "ecpat/curve.hpp"
#include "ecpat/hypothesis.hpp"
#include "ecpat/maps.hpp"
#include "ecpat/pattern.hpp"
#include "ecpat/subgroup.hpp"

// JSON wire formats. Rationals travel as strings ("p/q" or "p", "inf"
// for the point at infinity) so nothing is ever rounded.
//
//   curve            {"a": ["a1","a2","a3","a4","a6"], "label"?: str,
//                     "rank"?: int, "generators"?: [point...]}
//   point            {"x": "p/q", "y": "p/q"} | "identity"
//   mobius map       {"m": [["a","b"],["c","d"]]}
//   rational func    {"num": ["c0","c1",...], "den": [...]}
//   coordinate map   {"base": "x"|"y", "post": rational func}
//   gamma spec       {"generators": [point...], "include_torsion": bool,
//                     "rank"?: int}
//   value set        {"values": ["v",...], "provenance": str}
//   pattern report   {"kind", "length", "witnesses", "parameter"?,
//                     "implied_constant"?, "rank"?, "rank_basis"?}
//   branch set       {"locus": ["c0",...], "contains_infinity": bool}

namespace ecpat {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json p1_to_json(const P1Value& v);
P1Value p1_from_json(const json& j);

json curve_to_json(const Curve& e);
Curve curve_from_json(const json& j);

json point_to_json(const CurvePoint& p);
CurvePoint point_from_json(const json& j);

json mobius_to_json(const MobiusMap& m);
MobiusMap mobius_from_json(const json& j);

json ratfunc_to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const json& j);

json coordmap_to_json(const CoordinateMap& g);
CoordinateMap coordmap_from_json(const json& j);

json gamma_to_json(const GammaSpec& spec);
GammaSpec gamma_from_json(const json& j);

json valueset_to_json(const ValueSet& x);
ValueSet valueset_from_json(const json& j);

json report_to_json(const PatternReport& r);

json branchset_to_json(const BranchSet& b);

json verdict_to_json(const HypothesisVerdict& v);

// A map file holds either a mobius map or a rational function.
OrbitMap orbit_map_from_json(const json& j);
json orbit_map_to_json(const OrbitMap& f);

// Optional extras bundled in curve files.
struct CurveFile {
    Curve curve;
    std::optional<int> rank;
    std::vector<CurvePoint> generators;
};
CurveFile curve_file_from_json(const json& j);

json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

} // namespace ecpat
