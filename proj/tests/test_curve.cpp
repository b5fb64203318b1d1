// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecpat/curve.hpp"
#include "ecpat/intfactor.hpp"
#include "test_util.hpp"

using namespace ecpat;
using testutil::Rng;

namespace {

Curve curve_5077() { return curve_new(0, 0, 1, -7, 6, "5077.a1"); }
Curve curve_234446() { return curve_new(1, -1, 0, -79, 289, "234446.a1"); }
Curve curve_j_invariant_1728() { return curve_new(0, 0, 0, -1, 0); }  // y^2 = x^3 - x
Curve curve_mordell_1() { return curve_new(0, 0, 0, 0, 1); }          // y^2 = x^3 + 1

} // namespace

TEST_CASE("curve construction computes invariants and rejects singular models") {
    Curve e = curve_5077();
    CHECK(e.b2() == Rational(0));
    CHECK(e.b4() == Rational(-14));
    CHECK(e.b6() == Rational(25));
    CHECK(e.b8() == Rational(-49));
    CHECK(e.discriminant() == Rational(5077));

    CHECK(curve_234446().discriminant() != Rational(0));
    CHECK_THROWS_AS(curve_new(0, 0, 0, 0, 0), singular_curve_error);
    CHECK_THROWS_AS(curve_new(0, 0, 0, -3, 2), singular_curve_error);  // (x-1)^2(x+2)
}

TEST_CASE("point_on_curve accepts the tabulated points and reports residuals") {
    Curve e = curve_5077();
    CHECK(point_on_curve(e, Rational(0), Rational(2)) == CurvePoint(0, 2));
    CHECK(point_on_curve(e, Rational(4), Rational(6)) == CurvePoint(4, 6));
    CHECK(point_on_curve(e, Rational(2), Rational(0)) == CurvePoint(2, 0));
    CHECK(point_on_curve(e, Rational(-1), Rational(3)) == CurvePoint(-1, 3));
    CHECK(point_on_curve(e, Rational(3), Rational(3)) == CurvePoint(3, 3));
    CHECK(point_on_curve(e, Rational(-3), Rational(0)) == CurvePoint(-3, 0));
    try {
        point_on_curve(e, Rational(1), Rational(1));
        FAIL("expected a residual failure");
    } catch (const not_on_curve_error& err) {
        CHECK(err.residual == Rational(2));
    }
}

TEST_CASE("negation mirrors across the hyperelliptic involution") {
    Curve e = curve_5077();
    CHECK(neg(e, CurvePoint(0, 2)) == CurvePoint(0, -3));
    CHECK(e.contains(CurvePoint(0, -3)));
    CHECK(neg(e, CurvePoint::identity()).is_identity());

    Curve short_curve = curve_j_invariant_1728();
    CHECK(neg(short_curve, CurvePoint(0, 0)) == CurvePoint(0, 0));
}

TEST_CASE("addition against the chord oracle") {
    // substitute the line through (0,2) and (2,0) into the curve, take the
    // third root of the resulting cubic, and negate
    Curve e = curve_5077();
    CurvePoint p(0, 2), q(2, 0);
    Rational lambda = (q.y() - p.y()) / (q.x() - p.x());
    Rational nu = p.y() - lambda * p.x();
    // (lambda x + nu)^2 + a3 (lambda x + nu) = x^3 + a4 x + a6 collected as
    // a monic cubic with roots x(p), x(q), x3
    UniPoly cubic(std::vector<Rational>{
        e.a6() - nu * nu - e.a3() * nu,
        e.a4() - Rational(2) * lambda * nu - e.a3() * lambda,
        -lambda * lambda,
        Rational(1),
    });
    auto roots = rational_roots(cubic);
    REQUIRE(roots.size() == 3);
    CHECK(roots.count(p.x()) == 1);
    CHECK(roots.count(q.x()) == 1);
    roots.erase(p.x());
    roots.erase(q.x());
    Rational x3 = *roots.begin();
    CurvePoint third(x3, lambda * x3 + nu);
    REQUIRE(e.contains(third));

    CurvePoint sum = add(e, p, q);
    CHECK(sum == neg(e, third));
    CHECK(e.contains(sum));
    CHECK(sum == CurvePoint(-1, -4));
}

TEST_CASE("group axioms on random small combinations") {
    Rng rng(20260808);
    Curve e = curve_5077();
    std::vector<CurvePoint> seeds = {CurvePoint(0, 2), CurvePoint(2, 0), CurvePoint(-1, 3),
                                     CurvePoint(3, 3), CurvePoint(-3, 0), CurvePoint(4, 6)};
    std::vector<CurvePoint> pool = seeds;
    for (const CurvePoint& s : seeds)
        for (long n = -2; n <= 2; ++n) pool.push_back(mul(e, n, s));

    for (int i = 0; i < 200; ++i) {
        const CurvePoint& p = pool[testutil::rand_int(rng, 0, pool.size() - 1)];
        const CurvePoint& q = pool[testutil::rand_int(rng, 0, pool.size() - 1)];
        const CurvePoint& r = pool[testutil::rand_int(rng, 0, pool.size() - 1)];
        CHECK(add(e, p, q) == add(e, q, p));
        CHECK(add(e, add(e, p, q), r) == add(e, p, add(e, q, r)));
        CHECK(add(e, p, neg(e, p)).is_identity());
        CHECK(add(e, p, CurvePoint::identity()) == p);
        CHECK(e.contains(add(e, p, q)));
    }
}

TEST_CASE("mul matches repeated addition") {
    Curve e = curve_5077();
    CurvePoint p(0, 2);
    CurvePoint acc = CurvePoint::identity();
    for (long n = 0; n <= 24; ++n) {
        CHECK(mul(e, n, p) == acc);
        CHECK(mul(e, -n, p) == neg(e, acc));
        acc = add(e, acc, p);
    }
    CHECK(mul(e, 0, p).is_identity());
    CHECK(mul(e, -1, p) == neg(e, p));
}

TEST_CASE("clearing denominators produces a minimal integral model") {
    Curve e = curve_new(Rational(1, 2), Rational(0), Rational(0), Rational(-1), Rational(1));
    mpz_class u = clearing_denominator(e);
    CHECK(u == 2);
    Curve cleared = cleared_integral_model(e, u);
    CHECK(cleared.has_integral_coefficients());
    CHECK(cleared.a1() == Rational(1));

    CHECK(clearing_denominator(curve_5077()) == 1);

    // a4 with denominator 16 only needs u = 2 because a4 scales by u^4
    Curve f = curve_new(Rational(0), Rational(0), Rational(0), Rational(1, 16), Rational(1));
    CHECK(clearing_denominator(f) == 2);
}

TEST_CASE("torsion of y^2 = x^3 + 1 is cyclic of order 6") {
    Curve e = curve_mordell_1();
    auto tor = torsion_points(e);
    std::set<CurvePoint> expect = {CurvePoint::identity(), CurvePoint(-1, 0), CurvePoint(0, 1),
                                   CurvePoint(0, -1),      CurvePoint(2, 3),  CurvePoint(2, -3)};
    CHECK(tor == expect);
    // (2,3) generates: repeated addition reaches the identity only at step 6
    CurvePoint g(2, 3);
    CurvePoint acc = g;
    int order = 1;
    while (!acc.is_identity()) {
        acc = add(e, acc, g);
        ++order;
        REQUIRE(order <= 6);
    }
    CHECK(order == 6);
}

TEST_CASE("torsion of y^2 = x^3 - x is the full 2-torsion") {
    auto tor = torsion_points(curve_j_invariant_1728());
    std::set<CurvePoint> expect = {CurvePoint::identity(), CurvePoint(0, 0), CurvePoint(1, 0),
                                   CurvePoint(-1, 0)};
    CHECK(tor == expect);
}

TEST_CASE("torsion of 5077.a1 is trivial") {
    auto tor = torsion_points(curve_5077());
    CHECK(tor == std::set<CurvePoint>{CurvePoint::identity()});
}

TEST_CASE("torsion finds 2-torsion with non-integral coordinates") {
    // 2y + x + 1 = 0 meets this curve at x = -7, 13 and x = -29/4
    Curve e = curve_new(1, 1, 1, -135, -660);
    auto tor = torsion_points(e);
    CHECK(tor.count(CurvePoint(Rational(-29, 4), Rational(25, 8))) == 1);
    CHECK(tor.count(CurvePoint(-7, 3)) == 1);
    CHECK(tor.count(CurvePoint(13, -7)) == 1);

    SUBCASE("torsion is closed under the group operations") {
        for (const CurvePoint& p : tor) {
            CHECK(tor.count(neg(e, p)) == 1);
            for (const CurvePoint& q : tor) CHECK(tor.count(add(e, p, q)) == 1);
        }
    }
}

TEST_CASE("torsion output is a subgroup on every sample curve") {
    for (const Curve& e : {curve_mordell_1(), curve_j_invariant_1728(), curve_5077()}) {
        auto tor = torsion_points(e);
        for (const CurvePoint& p : tor) {
            CHECK(e.contains(p));
            CHECK(tor.count(neg(e, p)) == 1);
            for (const CurvePoint& q : tor) CHECK(tor.count(add(e, p, q)) == 1);
        }
    }
}
