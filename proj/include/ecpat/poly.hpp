// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ecpat/rational.hpp"

namespace ecpat {

// Dense univariate polynomial over Q, constant term first. The zero
// polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> ints) {
        for (long v : ints) c_.emplace_back(v);
        trim();
    }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return constant(Rational(1)); }
    static UniPoly t() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    static UniPoly monomial(size_t deg, const Rational& c);
    // (t - r1)(t - r2)...
    static UniPoly from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational eval(const Rational& v) const;

    UniPoly derivative() const;
    UniPoly scaled(const Rational& c) const;
    UniPoly make_monic() const;

    UniPoly operator-() const { return scaled(Rational(-1)); }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // quotient and remainder, deg r < deg b
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    // exact division; throws if the remainder is nonzero
    static UniPoly divexact(const UniPoly& a, const UniPoly& b);

    // e.g. "t^2 + 7*t - 18"
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Monic gcd; gcd(p, 0) is p made monic.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Exact Horner evaluation.
Rational poly_eval(const UniPoly& p, const Rational& v);

// All rational roots of p, without multiplicity, by divisor enumeration on
// the primitive integer form (rational root theorem). p != 0.
std::set<Rational> rational_roots(const UniPoly& p);

// p / gcd(p, p'), made monic: same complex roots, all simple. p != 0.
UniPoly squarefree_part(const UniPoly& p);

// Resultant of a and b via the Sylvester determinant, exact.
Rational resultant(const UniPoly& a, const UniPoly& b);

// Res_t(num(t) - v*den(t), a(t)) as a polynomial in v, computed from the
// formal Sylvester matrix by evaluation and Lagrange interpolation. The
// formal t-degree of num - v*den is max(deg num, deg den).
UniPoly elimination_resultant(const UniPoly& a, const UniPoly& num, const UniPoly& den);

} // namespace ecpat
