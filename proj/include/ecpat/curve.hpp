// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>

#include "ecpat/poly.hpp"
#include "ecpat/rational.hpp"

namespace ecpat {

class Curve;

// A rational point: either affine (x, y) or the identity (point at
// infinity of the Weierstrass model).
class CurvePoint {
public:
    CurvePoint() : identity_(true) {}
    CurvePoint(Rational x, Rational y) : identity_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint identity() { return CurvePoint(); }

    bool is_identity() const { return identity_; }
    const Rational& x() const {
        if (identity_) throw error("identity point has no affine coordinates");
        return x_;
    }
    const Rational& y() const {
        if (identity_) throw error("identity point has no affine coordinates");
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.identity_ != b.identity_) return false;
        return a.identity_ || (a.x_ == b.x_ && a.y_ == b.y_);
    }
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
        if (a.identity_ != b.identity_)
            return a.identity_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.identity_) return std::strong_ordering::equal;
        if (auto c = a.x_ <=> b.x_; c != 0) return c;
        return a.y_ <=> b.y_;
    }

    std::string to_string() const {
        return identity_ ? "identity" : "(" + x_.to_string() + ", " + y_.to_string() + ")";
    }

private:
    bool identity_;
    Rational x_, y_;
};

struct not_on_curve_error : error {
    not_on_curve_error(const std::string& what, Rational res)
        : error(what), residual(std::move(res)) {}
    Rational residual;
};

// y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over Q, nonsingular.
// The b- and c-invariants and the discriminant are computed on
// construction; a vanishing discriminant is rejected.
class Curve {
public:
    Curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
          std::optional<std::string> label = std::nullopt);

    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }
    const Rational& a3() const { return a3_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }
    const std::optional<std::string>& label() const { return label_; }

    const Rational& b2() const { return b2_; }
    const Rational& b4() const { return b4_; }
    const Rational& b6() const { return b6_; }
    const Rational& b8() const { return b8_; }
    const Rational& c4() const { return c4_; }
    const Rational& c6() const { return c6_; }
    const Rational& discriminant() const { return disc_; }

    bool has_integral_coefficients() const;

    // y^2 + a1*x*y + a3*y - (x^3 + a2*x^2 + a4*x + a6)
    Rational equation_residual(const Rational& x, const Rational& y) const;
    bool contains(const CurvePoint& p) const;

    // 4t^3 + b2*t^2 + 2*b4*t + b6 (vanishing locus of 2y + a1 x + a3)
    UniPoly two_division_poly() const;

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ &&
               a.a6_ == b.a6_;
    }

private:
    Rational a1_, a2_, a3_, a4_, a6_;
    Rational b2_, b4_, b6_, b8_, c4_, c6_, disc_;
    std::optional<std::string> label_;
};

Curve curve_new(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                const Rational& a6, std::optional<std::string> label = std::nullopt);

// The affine point (x, y) if it satisfies the equation exactly; throws
// not_on_curve_error carrying the residual otherwise.
CurvePoint point_on_curve(const Curve& e, const Rational& x, const Rational& y);

CurvePoint neg(const Curve& e, const CurvePoint& p);
CurvePoint add(const Curve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint mul(const Curve& e, long n, const CurvePoint& p);

// All torsion points of E(Q), the identity included.
std::set<CurvePoint> torsion_points(const Curve& e);

// The u > 0 of minimal size with (a1*u, a2*u^2, a3*u^3, a4*u^4, a6*u^6)
// integral; (x, y) -> (u^2 x, u^3 y) maps E to that integral model.
mpz_class clearing_denominator(const Curve& e);
Curve cleared_integral_model(const Curve& e, const mpz_class& u);

} // namespace ecpat
