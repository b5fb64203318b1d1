// SPDX-License-Identifier: Apache-2.0
#include "ecpat/hypothesis.hpp"

namespace ecpat {

BranchSet branch_set_x(const Curve& e) {
    // the fiber of x over t degenerates where the quadratic in y has a
    // double root, i.e. on the 2-division locus; the identity makes the
    // fiber over infinity a single point
    BranchSet b;
    b.locus = squarefree_part(e.two_division_poly());
    b.contains_infinity = true;
    return b;
}

BranchSet mobius_image_branch_set(const BranchSet& b, const MobiusMap& m) {
    MobiusImagePoly img = substitute_mobius(b.locus, m);
    BranchSet out;
    out.locus = img.poly.degree() >= 1 ? img.poly.make_monic() : UniPoly::one();
    if (b.contains_infinity && img.image_of_infinity) {
        // adjoin M(inf); it cannot collide with the image of a finite root
        out.locus = out.locus * UniPoly(std::vector<Rational>{-*img.image_of_infinity,
                                                              Rational(1)});
    }
    out.contains_infinity =
        img.root_lost_to_infinity || (b.contains_infinity && !img.image_of_infinity);
    return out;
}

bool branch_sets_equal(const BranchSet& b1, const BranchSet& b2) {
    return b1.contains_infinity == b2.contains_infinity && b1.locus == b2.locus;
}

RationalFunction lattes_duplication(const Curve& e) {
    UniPoly num(std::vector<Rational>{-e.b8(), Rational(-2) * e.b6(), -e.b4(), Rational(0),
                                      Rational(1)});
    return RationalFunction(num, e.two_division_poly());
}

namespace {

// number of distinct complex roots
int distinct_root_count(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 0;
    return squarefree_part(p).degree();
}

// multiply in the factor (t - c) unless c is already a root
UniPoly adjoin_root(const UniPoly& locus, const Rational& c) {
    if (locus.eval(c).is_zero()) return locus;
    return locus * UniPoly(std::vector<Rational>{-c, Rational(1)});
}

UniPoly remove_root(const UniPoly& locus, const Rational& c) {
    if (!locus.eval(c).is_zero()) return locus;
    return UniPoly::divexact(locus, UniPoly(std::vector<Rational>{-c, Rational(1)}));
}

} // namespace

/*
 * Finite branch values of F through the critical points: eliminating t
 * from num(t) - v*den(t) and the Wronskian numerator W = num'*den -
 * num*den' leaves a polynomial in v whose roots are the images of the
 * finite critical points. Two corrections close the gaps:
 *
 *  - v = F(inf) needs a direct fiber count. When deg num <= deg den the
 *    formal leading coefficient of num - v*den vanishes there, which can
 *    plant a spurious resultant root, and ramification at t = inf is not
 *    seen by W at all.
 *  - the fiber over infinity has distinct-size (# distinct roots of den)
 *    + (1 if deg num > deg den); a shortfall against deg F means
 *    infinity is a branch value.
 */
BranchSet ratfunc_branch_set(const RationalFunction& f) {
    if (f.is_constant()) throw error("branch set of a constant map");
    int m = f.degree();
    BranchSet out;

    UniPoly w = f.num().derivative() * f.den() - f.num() * f.den().derivative();
    if (w.is_zero()) throw error("branch set of a constant map");
    if (w.degree() >= 1) {
        UniPoly res = elimination_resultant(w, f.num(), f.den());
        if (res.degree() >= 1) out.locus = squarefree_part(res);
    }

    P1Value at_inf = ratfunc_apply(f, P1Value::infinity());
    if (at_inf.is_finite()) {
        const Rational& c = at_inf.finite();
        UniPoly fiber = f.num() - f.den().scaled(c);
        bool branched = distinct_root_count(fiber) + 1 < m;
        out.locus = branched ? adjoin_root(out.locus, c) : remove_root(out.locus, c);
    }

    int inf_fiber = distinct_root_count(f.den()) + (f.num().degree() > f.den().degree() ? 1 : 0);
    out.contains_infinity = inf_fiber < m;
    return out;
}

BranchSet ratfunc_image_branch_set(const BranchSet& b, const RationalFunction& f) {
    if (f.is_constant()) throw error("image under a constant map");
    BranchSet out;
    if (b.locus.degree() >= 1) {
        UniPoly res = elimination_resultant(b.locus, f.num(), f.den());
        if (res.degree() >= 1) out.locus = squarefree_part(res);
        // roots of the locus that are poles of F map to infinity
        out.contains_infinity = poly_gcd(b.locus, f.den()).degree() > 0;
    }
    if (b.contains_infinity) {
        P1Value at_inf = ratfunc_apply(f, P1Value::infinity());
        if (at_inf.is_infinity())
            out.contains_infinity = true;
        else
            out.locus = adjoin_root(out.locus, at_inf.finite());
    }
    return out;
}

std::string hypothesis_status_name(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::Satisfied: return "satisfied";
        case HypothesisStatus::Violated: return "violated";
        case HypothesisStatus::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// branch(g) for the computable shapes: bare x, or an invertible
// degree-1 post-composition with x.
std::optional<BranchSet> computable_branch_set(const Curve& e, const CoordinateMap& g) {
    if (g.base() != CoordinateMap::Base::X) return std::nullopt;
    if (g.post_is_identity()) return branch_set_x(e);
    if (auto m = g.post().as_mobius()) return mobius_image_branch_set(branch_set_x(e), *m);
    return std::nullopt;
}

} // namespace

HypothesisVerdict check_pattern_hypothesis(const Curve& e, const CoordinateMap& g,
                                           const OrbitMap& f) {
    HypothesisVerdict verdict;

    // normalize a degree-1 rational function to its fractional-linear form
    std::optional<MobiusMap> mob;
    if (std::holds_alternative<MobiusMap>(f))
        mob = std::get<MobiusMap>(f);
    else
        mob = std::get<RationalFunction>(f).as_mobius();

    if (mob) {
        auto order = mobius_torsion_order(*mob);
        if (!order) {
            verdict.status = HypothesisStatus::Satisfied;
            verdict.reason = "case 1: F is a fractional-linear map of infinite order";
            return verdict;
        }
        auto bg = computable_branch_set(e, g);
        if (!bg) {
            verdict.status = HypothesisStatus::Unknown;
            verdict.reason = "case 4: branch values of g not computable for this shape";
            return verdict;
        }
        BranchSet bfg = mobius_image_branch_set(*bg, *mob);
        bool equal = branch_sets_equal(*bg, bfg);
        verdict.status = equal ? HypothesisStatus::Violated : HypothesisStatus::Satisfied;
        verdict.reason = std::string("case 2: F has finite order ") + std::to_string(*order) +
                         (equal ? " and permutes the branch values of g"
                                : " but does not preserve the branch values of g");
        verdict.branch_g = *bg;
        verdict.branch_fg = bfg;
        return verdict;
    }

    const RationalFunction& fr = std::get<RationalFunction>(f);
    if (fr.is_constant()) {
        verdict.status = HypothesisStatus::Unknown;
        verdict.reason = "case 4: constant recurrence map";
        return verdict;
    }
    if (g.base() == CoordinateMap::Base::X && g.post_is_identity()) {
        BranchSet bg = branch_set_x(e);
        BranchSet image = ratfunc_image_branch_set(bg, fr);
        BranchSet crit = ratfunc_branch_set(fr);
        BranchSet bfg;
        bfg.locus = squarefree_part(image.locus * crit.locus);
        bfg.contains_infinity = image.contains_infinity || crit.contains_infinity;
        bool equal = branch_sets_equal(bg, bfg);
        verdict.status = equal ? HypothesisStatus::Violated : HypothesisStatus::Satisfied;
        verdict.reason = std::string("case 3: branch values of F o g ") +
                         (equal ? "coincide with" : "differ from") + " those of g";
        verdict.branch_g = bg;
        verdict.branch_fg = bfg;
        return verdict;
    }

    verdict.status = HypothesisStatus::Unknown;
    verdict.reason = "case 4: configuration outside the decidable shapes";
    return verdict;
}

} // namespace ecpat
