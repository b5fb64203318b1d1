// SPDX-License-Identifier: Apache-2.0
#include "ecpat/curve.hpp"

#include <cstdlib>

#include "ecpat/intfactor.hpp"

namespace ecpat {

Curve::Curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
             std::optional<std::string> label)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)), label_(std::move(label)) {
    b2_ = a1_ * a1_ + Rational(4) * a2_;
    b4_ = Rational(2) * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + Rational(4) * a6_;
    b8_ = a1_ * a1_ * a6_ + Rational(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
          a4_ * a4_;
    c4_ = b2_ * b2_ - Rational(24) * b4_;
    c6_ = -(b2_ * b2_ * b2_) + Rational(36) * b2_ * b4_ - Rational(216) * b6_;
    disc_ = -(b2_ * b2_ * b8_) - Rational(8) * b4_ * b4_ * b4_ - Rational(27) * b6_ * b6_ +
            Rational(9) * b2_ * b4_ * b6_;
    if (disc_.is_zero()) throw singular_curve_error();
}

bool Curve::has_integral_coefficients() const {
    return a1_.is_integer() && a2_.is_integer() && a3_.is_integer() && a4_.is_integer() &&
           a6_.is_integer();
}

Rational Curve::equation_residual(const Rational& x, const Rational& y) const {
    return y * y + a1_ * x * y + a3_ * y - (x * x * x + a2_ * x * x + a4_ * x + a6_);
}

bool Curve::contains(const CurvePoint& p) const {
    return p.is_identity() || equation_residual(p.x(), p.y()).is_zero();
}

UniPoly Curve::two_division_poly() const {
    return UniPoly(std::vector<Rational>{b6_, Rational(2) * b4_, b2_, Rational(4)});
}

Curve curve_new(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                const Rational& a6, std::optional<std::string> label) {
    return Curve(a1, a2, a3, a4, a6, std::move(label));
}

CurvePoint point_on_curve(const Curve& e, const Rational& x, const Rational& y) {
    Rational res = e.equation_residual(x, y);
    if (!res.is_zero())
        throw not_on_curve_error("point (" + x.to_string() + ", " + y.to_string() +
                                     ") is not on the curve: residual " + res.to_string(),
                                 res);
    return CurvePoint(x, y);
}

CurvePoint neg(const Curve& e, const CurvePoint& p) {
    if (p.is_identity()) return p;
    return CurvePoint(p.x(), -p.y() - e.a1() * p.x() - e.a3());
}

/*
 * Chord-tangent law on the general Weierstrass model. With the line
 * y = lambda*x + nu through P and Q (tangent when P = Q):
 *
 *   x3 = lambda^2 + a1*lambda - a2 - x1 - x2
 *   y3 = -(lambda + a1)*x3 - nu - a3
 */
CurvePoint add(const Curve& e, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    if (q == neg(e, p)) return CurvePoint::identity();

    Rational lambda(0), nu(0);
    if (p.x() == q.x()) {
        // same x and q != -p means p = q; the tangent denominator
        // 2y + a1 x + a3 is nonzero here (it vanishes only when p = -p)
        Rational den = Rational(2) * p.y() + e.a1() * p.x() + e.a3();
        lambda = (Rational(3) * p.x() * p.x() + Rational(2) * e.a2() * p.x() + e.a4() -
                  e.a1() * p.y()) /
                 den;
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    nu = p.y() - lambda * p.x();
    Rational x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x() - q.x();
    Rational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
    return CurvePoint(x3, y3);
}

CurvePoint mul(const Curve& e, long n, const CurvePoint& p) {
    bool negate = n < 0;
    unsigned long k = negate ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::identity();
    CurvePoint base = p;
    while (k != 0) {
        if (k & 1) acc = add(e, acc, base);
        k >>= 1;
        if (k != 0) base = add(e, base, base);
    }
    return negate ? neg(e, acc) : acc;
}

mpz_class clearing_denominator(const Curve& e) {
    // per prime p of any coefficient denominator, u needs
    // v_p(u) >= ceil(v_p(den a_i) / i)
    struct Entry {
        const Rational* a;
        unsigned weight;
    };
    Entry entries[] = {{&e.a1(), 1}, {&e.a2(), 2}, {&e.a3(), 3}, {&e.a4(), 4}, {&e.a6(), 6}};
    std::map<mpz_class, unsigned> exps;
    for (const auto& [a, w] : entries) {
        if (a->is_integer()) continue;
        for (const auto& [p, ord] : factorize(a->den())) {
            unsigned need = (ord + w - 1) / w;
            auto it = exps.find(p);
            if (it == exps.end() || it->second < need) exps[p] = need;
        }
    }
    mpz_class u = 1;
    for (const auto& [p, ord] : exps)
        for (unsigned i = 0; i < ord; ++i) u *= p;
    return u;
}

Curve cleared_integral_model(const Curve& e, const mpz_class& u) {
    Rational ur(u, mpz_class(1));
    Rational u2 = ur * ur;
    Rational u3 = u2 * ur;
    Rational u4 = u2 * u2;
    Rational u6 = u3 * u3;
    return Curve(e.a1() * ur, e.a2() * u2, e.a3() * u3, e.a4() * u4, e.a6() * u6);
}

namespace {

bool has_small_order(const Curve& e, const CurvePoint& p, int max_order) {
    CurvePoint acc = p;
    for (int n = 1; n <= max_order; ++n) {
        if (acc.is_identity()) return true;
        acc = add(e, acc, p);
    }
    return false;
}

} // namespace

/*
 * Torsion by the Lutz-Nagell sweep on an integral model. After clearing
 * denominators, write eta = 2y + a1 x + a3, so eta^2 = 4x^3 + b2 x^2 +
 * 2 b4 x + b6 on the curve. A torsion point of order > 2 has integral
 * x, y and eta^2 | disc; a point of order 2 has eta = 0 and its x is a
 * rational root of the 2-division cubic (leading coefficient 4, so x may
 * have denominator up to 4). Every candidate is kept only if one of its
 * first 12 multiples is the identity.
 */
std::set<CurvePoint> torsion_points(const Curve& e) {
    mpz_class u = clearing_denominator(e);
    Curve ei = u == 1 ? e : cleared_integral_model(e, u);
    Rational u2(u * u, mpz_class(1));
    Rational u3(u * u * u, mpz_class(1));

    std::set<CurvePoint> candidates;
    UniPoly psi2 = ei.two_division_poly();
    for (const Rational& x : rational_roots(psi2))
        candidates.insert(CurvePoint(x, (-(ei.a1() * x) - ei.a3()) / Rational(2)));

    for (const mpz_class& eta : square_divisors(ei.discriminant().num())) {
        Rational eta_r(eta, mpz_class(1));
        UniPoly shifted = psi2 - UniPoly::constant(eta_r * eta_r);
        for (const Rational& x : rational_roots(shifted)) {
            for (int s : {1, -1}) {
                Rational y = (Rational(s) * eta_r - ei.a1() * x - ei.a3()) / Rational(2);
                if (ei.equation_residual(x, y).is_zero()) candidates.insert(CurvePoint(x, y));
            }
        }
    }

    std::set<CurvePoint> out{CurvePoint::identity()};
    for (const CurvePoint& c : candidates) {
        CurvePoint p(c.x() / u2, c.y() / u3);
        if (e.contains(p) && has_small_order(e, p, 12)) out.insert(p);
    }
    return out;
}

} // namespace ecpat
