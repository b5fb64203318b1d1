// SPDX-License-Identifier: Apache-2.0
#include "ecpat/membership.hpp"

#include "ecpat/intfactor.hpp"

namespace ecpat {

std::optional<Rational> is_square(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    auto sn = perfect_sqrt(r.num());
    if (!sn) return std::nullopt;
    auto sd = perfect_sqrt(r.den());
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

std::set<Rational> y_candidates(const Curve& e, const Rational& x0) {
    // y^2 + (a1 x0 + a3) y - f(x0) = 0
    Rational b = e.a1() * x0 + e.a3();
    Rational f = x0 * x0 * x0 + e.a2() * x0 * x0 + e.a4() * x0 + e.a6();
    Rational disc = b * b + Rational(4) * f;
    std::set<Rational> out;
    if (auto root = is_square(disc)) {
        out.insert((-b + *root) / Rational(2));
        out.insert((-b - *root) / Rational(2));
    }
    return out;
}

std::optional<CurvePoint> g_membership(const Curve& e, const CoordinateMap& g, const P1Value& v) {
    for (const P1Value& t : ratfunc_preimages(g.post(), v)) {
        if (t.is_infinity()) return CurvePoint::identity();
        const Rational& t0 = t.finite();
        if (g.base() == CoordinateMap::Base::X) {
            auto ys = y_candidates(e, t0);
            if (!ys.empty()) return CurvePoint(t0, *ys.begin());
        } else {
            // fix y = t0: monic cubic in x
            UniPoly cubic(std::vector<Rational>{e.a6() - e.a3() * t0 - t0 * t0,
                                                e.a4() - e.a1() * t0, e.a2(), Rational(1)});
            auto xs = rational_roots(cubic);
            if (!xs.empty()) return CurvePoint(*xs.begin(), t0);
        }
    }
    return std::nullopt;
}

std::set<CurvePoint> naive_point_search(const Curve& e, long num_bound, long den_bound) {
    if (num_bound < 1 || den_bound < 1) throw error("point search bounds must be >= 1");
    mpz_class u = clearing_denominator(e);
    Curve ei = u == 1 ? e : cleared_integral_model(e, u);
    Rational u2(u * u, mpz_class(1));
    Rational u3(u * u * u, mpz_class(1));

    std::set<CurvePoint> out{CurvePoint::identity()};
    for (long den = 1; den <= den_bound; ++den) {
        mpz_class e2 = mpz_class(den) * den;
        mpz_class mmax = num_bound * e2;
        for (mpz_class m = -mmax; m <= mmax; ++m) {
            if (gcd(m, mpz_class(den)) != 1) continue;
            Rational x(m, e2);
            for (const Rational& y : y_candidates(ei, x))
                out.insert(CurvePoint(x / u2, y / u3));
        }
    }
    return out;
}

} // namespace ecpat
