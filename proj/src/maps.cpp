// SPDX-License-Identifier: Apache-2.0
#include "ecpat/maps.hpp"

namespace ecpat {

MobiusMap::MobiusMap(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
    : a_(a), b_(b), c_(c), d_(d) {
    if ((a_ * d_ - b_ * c_).is_zero()) throw singular_map_error();
    // scale to coprime integers with the first nonzero entry positive
    mpz_class l = 1;
    for (const Rational* r : {&a_, &b_, &c_, &d_})
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->den().get_mpz_t());
    mpz_class g = 0;
    for (const Rational* r : {&a_, &b_, &c_, &d_}) {
        mpz_class scaled = r->num() * (l / r->den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(l, g);
    a_ *= scale;
    b_ *= scale;
    c_ *= scale;
    d_ *= scale;
    for (const Rational* r : {&a_, &b_, &c_, &d_}) {
        if (r->is_zero()) continue;
        if (r->sign() < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
            d_ = -d_;
        }
        break;
    }
}

P1Value mobius_apply(const MobiusMap& m, const P1Value& v) {
    if (v.is_infinity()) {
        if (m.c().is_zero()) return P1Value::infinity();
        return P1Value(m.a() / m.c());
    }
    const Rational& t = v.finite();
    Rational den = m.c() * t + m.d();
    if (den.is_zero()) return P1Value::infinity();
    return P1Value((m.a() * t + m.b()) / den);
}

MobiusMap mobius_compose(const MobiusMap& m, const MobiusMap& n) {
    return MobiusMap(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                     m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
}

std::optional<int> mobius_torsion_order(const MobiusMap& m) {
    if (m.is_scalar()) return 1;
    Rational tr = m.trace();
    if (tr.is_zero()) return 2;
    Rational r = tr * tr / m.det();
    if (r == Rational(1)) return 3;
    if (r == Rational(2)) return 4;
    if (r == Rational(3)) return 6;
    return std::nullopt;
}

MobiusImagePoly substitute_mobius(const UniPoly& p, const MobiusMap& m) {
    if (p.is_zero()) throw zero_polynomial_error();
    MobiusImagePoly out;

    // q(t) = (-c t + a)^n * p(M^{-1}(t)) with M^{-1} = (d t - b)/(-c t + a);
    // the roots of q are the finite images M(r) over roots r of p.
    int n = p.degree();
    UniPoly lin1(std::vector<Rational>{-m.b(), m.d()});  // d t - b
    UniPoly lin2(std::vector<Rational>{m.a(), -m.c()});  // -c t + a
    std::vector<UniPoly> pow1(n + 1), pow2(n + 1);
    pow1[0] = pow2[0] = UniPoly::one();
    for (int i = 1; i <= n; ++i) {
        pow1[i] = pow1[i - 1] * lin1;
        pow2[i] = pow2[i - 1] * lin2;
    }
    UniPoly q = UniPoly::zero();
    for (int k = 0; k <= n; ++k) {
        if (p.coeff(k).is_zero()) continue;
        q = q + (pow1[k] * pow2[n - k]).scaled(p.coeff(k));
    }
    out.poly = q;

    if (!m.c().is_zero()) {
        out.root_lost_to_infinity = p.eval(-(m.d() / m.c())).is_zero();
        out.image_of_infinity = m.a() / m.c();
    }
    return out;
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("zero denominator polynomial");
    if (num_.is_zero()) {
        den_ = UniPoly::one();
    } else {
        UniPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::divexact(num_, g);
            den_ = UniPoly::divexact(den_, g);
        }
    }
    Rational lead = den_.leading();
    if (!(lead == Rational(1))) {
        Rational inv = lead.reciprocal();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::from_mobius(const MobiusMap& m) {
    return RationalFunction(UniPoly(std::vector<Rational>{m.b(), m.a()}),
                            UniPoly(std::vector<Rational>{m.d(), m.c()}));
}

std::optional<MobiusMap> RationalFunction::as_mobius() const {
    if (num_.degree() > 1 || den_.degree() > 1 || num_.is_zero()) return std::nullopt;
    Rational a = num_.coeff(1), b = num_.coeff(0);
    Rational c = den_.coeff(1), d = den_.coeff(0);
    if ((a * d - b * c).is_zero()) return std::nullopt;  // constant map
    return MobiusMap(a, b, c, d);
}

P1Value ratfunc_apply(const RationalFunction& h, const P1Value& v) {
    if (v.is_infinity()) {
        int dn = h.num().degree(), dd = h.den().degree();
        if (dn > dd) return P1Value::infinity();
        if (dn < dd) return P1Value(Rational(0));
        return P1Value(h.num().leading() / h.den().leading());
    }
    Rational n = h.num().eval(v.finite());
    Rational d = h.den().eval(v.finite());
    if (d.is_zero()) return P1Value::infinity();  // n != 0 since gcd(num, den) = 1
    return P1Value(n / d);
}

std::set<P1Value> ratfunc_preimages(const RationalFunction& h, const P1Value& v) {
    std::set<P1Value> out;
    UniPoly fiber;
    if (v.is_infinity())
        fiber = h.den();
    else
        fiber = h.num() - h.den().scaled(v.finite());
    if (!fiber.is_zero() && fiber.degree() >= 1)
        for (const Rational& r : rational_roots(fiber)) out.insert(P1Value(r));
    if (ratfunc_apply(h, P1Value::infinity()) == v) out.insert(P1Value::infinity());
    return out;
}

CoordinateMap::CoordinateMap(Base base, RationalFunction post)
    : base_(base), post_(std::move(post)) {
    if (post_.is_constant()) throw error("coordinate map must be non-constant");
}

P1Value coordmap_apply(const Curve&, const CoordinateMap& g, const CurvePoint& p) {
    P1Value base = p.is_identity()
                       ? P1Value::infinity()
                       : P1Value(g.base() == CoordinateMap::Base::X ? p.x() : p.y());
    return ratfunc_apply(g.post(), base);
}

P1Value orbit_map_apply(const OrbitMap& f, const P1Value& v) {
    if (std::holds_alternative<MobiusMap>(f)) return mobius_apply(std::get<MobiusMap>(f), v);
    return ratfunc_apply(std::get<RationalFunction>(f), v);
}

std::string orbit_map_to_string(const OrbitMap& f) {
    if (std::holds_alternative<MobiusMap>(f)) return std::get<MobiusMap>(f).to_string();
    return std::get<RationalFunction>(f).to_string();
}

} // namespace ecpat
