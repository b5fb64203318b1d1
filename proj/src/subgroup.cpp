// SPDX-License-Identifier: Apache-2.0
#include "ecpat/subgroup.hpp"

namespace ecpat {

std::set<CurvePoint> enumerate_gamma(const Curve& e, const GammaSpec& spec, long coeff_bound) {
    if (coeff_bound < 0) throw error("coefficient bound must be >= 0");
    for (const CurvePoint& g : spec.generators)
        if (!e.contains(g))
            throw generator_not_on_curve_error("generator " + g.to_string() +
                                               " is not on the curve");

    // fold generators one at a time so each partial sum is reused
    std::set<CurvePoint> sums{CurvePoint::identity()};
    for (const CurvePoint& g : spec.generators) {
        std::vector<CurvePoint> multiples;
        multiples.reserve(2 * coeff_bound + 1);
        CurvePoint pos = CurvePoint::identity();
        multiples.push_back(pos);
        for (long n = 1; n <= coeff_bound; ++n) {
            pos = add(e, pos, g);
            multiples.push_back(pos);
            multiples.push_back(neg(e, pos));
        }
        std::set<CurvePoint> next;
        for (const CurvePoint& s : sums)
            for (const CurvePoint& m : multiples) next.insert(add(e, s, m));
        sums = std::move(next);
    }

    if (!spec.include_torsion) return sums;
    std::set<CurvePoint> out;
    for (const CurvePoint& t : torsion_points(e))
        for (const CurvePoint& s : sums) out.insert(add(e, s, t));
    return out;
}

ValueSet image_set(const Curve& e, const CoordinateMap& g, const std::set<CurvePoint>& points,
                   bool keep_infinity) {
    ValueSet out;
    out.provenance = "image of " + std::to_string(points.size()) + " points under " +
                     g.to_string();
    for (const CurvePoint& p : points) {
        P1Value v = coordmap_apply(e, g, p);
        if (v.is_infinity() && !keep_infinity) continue;
        out.values.insert(v);
    }
    return out;
}

ValueSet intersect_images(const Curve& e1, const CoordinateMap& g1,
                          const std::set<CurvePoint>& pts1, const Curve& e2,
                          const CoordinateMap& g2, const std::set<CurvePoint>& pts2,
                          bool keep_infinity) {
    ValueSet a = image_set(e1, g1, pts1, keep_infinity);
    ValueSet b = image_set(e2, g2, pts2, keep_infinity);
    ValueSet out;
    out.provenance = "intersection of images";
    for (const P1Value& v : a.values)
        if (b.contains(v)) out.values.insert(v);
    return out;
}

} // namespace ecpat
