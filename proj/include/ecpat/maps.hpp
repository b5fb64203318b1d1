// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "ecpat/curve.hpp"
#include "ecpat/poly.hpp"
#include "ecpat/rational.hpp"

namespace ecpat {

// A fractional-linear map t -> (a t + b)/(c t + d) with nonzero
// determinant, held in canonical projective form: coprime integer entries
// with the first nonzero of (a, b, c, d) positive. Two maps are equal
// exactly when their canonical forms coincide.
class MobiusMap {
public:
    MobiusMap(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }
    static MobiusMap translation(const Rational& a) { return MobiusMap(1, a, 0, 1); }
    static MobiusMap scaling(const Rational& q) { return MobiusMap(q, 0, 0, 1); }
    static MobiusMap inversion() { return MobiusMap(0, 1, 1, 0); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational det() const { return a_ * d_ - b_ * c_; }
    Rational trace() const { return a_ + d_; }
    bool is_scalar() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

    friend bool operator==(const MobiusMap& m, const MobiusMap& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }

    std::string to_string() const {
        return "[" + a_.to_string() + " " + b_.to_string() + "; " + c_.to_string() + " " +
               d_.to_string() + "]";
    }

private:
    Rational a_, b_, c_, d_;
};

// Exact projective evaluation, including infinity on either side.
P1Value mobius_apply(const MobiusMap& m, const P1Value& v);

MobiusMap mobius_compose(const MobiusMap& m, const MobiusMap& n);

// Exact order of the class of M in PGL2(Q): nullopt means infinite.
//
// The order is n iff the eigenvalue ratio r of the matrix is a primitive
// n-th root of unity. trace^2/det = r + 2 + 1/r is rational, so r + 1/r
// in {-2,-1,0,1,2}, limiting n to 1, 2, 3, 4, 6:
//   scalar matrix        -> 1
//   trace = 0            -> 2   (r = -1)
//   trace^2/det = 1      -> 3
//   trace^2/det = 2      -> 4
//   trace^2/det = 3      -> 6
//   trace^2/det = 4, non-scalar -> parabolic, infinite
//   anything else        -> infinite
std::optional<int> mobius_torsion_order(const MobiusMap& m);

// Image of p's root set under M. `poly` has root set M(roots p) minus
// anything sent to infinity; `root_lost_to_infinity` notes whether a root
// was sent there, and `image_of_infinity` is M(inf) when finite.
struct MobiusImagePoly {
    UniPoly poly;
    bool root_lost_to_infinity = false;
    std::optional<Rational> image_of_infinity;
};
MobiusImagePoly substitute_mobius(const UniPoly& p, const MobiusMap& m);

// num/den in lowest terms with the denominator monic. Used both for the
// recurrence maps F and for post-composition factors H.
class RationalFunction {
public:
    RationalFunction(UniPoly num, UniPoly den);

    static RationalFunction identity() { return RationalFunction(UniPoly::t(), UniPoly::one()); }
    static RationalFunction from_poly(UniPoly p) {
        return RationalFunction(std::move(p), UniPoly::one());
    }
    static RationalFunction from_mobius(const MobiusMap& m);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    int degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_constant() const { return degree() <= 0; }
    // degree <= 1 in both numerator and denominator
    std::optional<MobiusMap> as_mobius() const;

    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

    std::string to_string() const {
        if (den_ == UniPoly::one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    UniPoly num_, den_;
};

P1Value ratfunc_apply(const RationalFunction& h, const P1Value& v);

// All rational t with H(t) = v, infinity included when it maps to v.
std::set<P1Value> ratfunc_preimages(const RationalFunction& h, const P1Value& v);

// g = post(pi(P)) with pi the x- or y-coordinate; pi(identity) = inf.
// x has degree 2 and y degree 3 as maps to the projective line.
class CoordinateMap {
public:
    enum class Base { X, Y };

    CoordinateMap(Base base, RationalFunction post);

    static CoordinateMap x() { return CoordinateMap(Base::X, RationalFunction::identity()); }
    static CoordinateMap y() { return CoordinateMap(Base::Y, RationalFunction::identity()); }
    static CoordinateMap x_plus(const Rational& a) {
        return CoordinateMap(Base::X,
                             RationalFunction(UniPoly(std::vector<Rational>{a, Rational(1)}),
                                              UniPoly::one()));
    }
    static CoordinateMap x_times(const Rational& q) {
        return CoordinateMap(Base::X,
                             RationalFunction(UniPoly(std::vector<Rational>{Rational(0), q}),
                                              UniPoly::one()));
    }

    Base base() const { return base_; }
    const RationalFunction& post() const { return post_; }
    bool post_is_identity() const { return post_ == RationalFunction::identity(); }

    int degree() const { return post_.degree() * (base_ == Base::X ? 2 : 3); }

    std::string to_string() const {
        std::string pi = base_ == Base::X ? "x" : "y";
        return post_is_identity() ? pi : "(" + post_.to_string() + ") o " + pi;
    }

private:
    Base base_;
    RationalFunction post_;
};

P1Value coordmap_apply(const Curve& e, const CoordinateMap& g, const CurvePoint& p);

// Recurrence map for orbit detection and hypothesis checking.
using OrbitMap = std::variant<MobiusMap, RationalFunction>;

P1Value orbit_map_apply(const OrbitMap& f, const P1Value& v);
std::string orbit_map_to_string(const OrbitMap& f);

} // namespace ecpat
