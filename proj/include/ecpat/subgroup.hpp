// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecpat/curve.hpp"
#include "ecpat/maps.hpp"

namespace ecpat {

// A finitely generated approximation of a finite-rank subgroup: explicit
// generators plus, optionally, the full torsion subgroup. declared_rank
// is an external input used only in bound reports; when absent the
// generator count stands in for it.
struct GammaSpec {
    std::vector<CurvePoint> generators;
    bool include_torsion = true;
    std::optional<int> declared_rank;
};

// A deduplicated finite set of projective values plus a note on where it
// came from.
struct ValueSet {
    std::set<P1Value> values;
    std::string provenance;

    bool contains(const P1Value& v) const { return values.count(v) != 0; }
    size_t size() const { return values.size(); }
};

// { sum n_i G_i + T : |n_i| <= coeff_bound }, T over torsion_points(E)
// when include_torsion, deduplicated.
std::set<CurvePoint> enumerate_gamma(const Curve& e, const GammaSpec& spec, long coeff_bound);

// { g(P) : P in points }, deduplicated; infinity dropped unless kept.
ValueSet image_set(const Curve& e, const CoordinateMap& g, const std::set<CurvePoint>& points,
                   bool keep_infinity = false);

ValueSet intersect_images(const Curve& e1, const CoordinateMap& g1,
                          const std::set<CurvePoint>& pts1, const Curve& e2,
                          const CoordinateMap& g2, const std::set<CurvePoint>& pts2,
                          bool keep_infinity = false);

} // namespace ecpat
