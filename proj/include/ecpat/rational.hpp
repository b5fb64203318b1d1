// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "ecpat/errors.hpp"

namespace ecpat {

// Exact rational scalar. Always held in canonical form: gcd(|num|, den) = 1
// and den >= 1, so equality and ordering are plain structural comparisons.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { require_nonzero_den(); q_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { require_nonzero_den(); q_.canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { require_nonzero_den(); q_.canonicalize(); }

    // Accepts "p", "-p", "p/q"; rejects everything else.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational reciprocal() const {
        if (is_zero()) throw error("reciprocal of zero");
        return Rational(q_.get_den(), q_.get_num());
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    double to_double() const { return q_.get_d(); }

private:
    void require_nonzero_den() {
        if (sgn(q_.get_den()) == 0) throw error("zero denominator");
    }

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A point of the projective line over Q: a finite rational or the single
// point at infinity. Ordering places every finite value before infinity.
class P1Value {
public:
    P1Value() : infinite_(false), r_() {}
    P1Value(Rational r) : infinite_(false), r_(std::move(r)) {}
    P1Value(long n) : P1Value(Rational(n)) {}

    static P1Value infinity() {
        P1Value v;
        v.infinite_ = true;
        return v;
    }

    static P1Value parse(const std::string& text);

    bool is_infinity() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    const Rational& finite() const {
        if (infinite_) throw error("projective infinity has no finite value");
        return r_;
    }

    friend bool operator==(const P1Value& a, const P1Value& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.r_ == b.r_;
    }
    friend std::strong_ordering operator<=>(const P1Value& a, const P1Value& b) {
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.infinite_) return std::strong_ordering::equal;
        return a.r_ <=> b.r_;
    }

    std::string to_string() const { return infinite_ ? "inf" : r_.to_string(); }

private:
    bool infinite_;
    Rational r_;
};

std::ostream& operator<<(std::ostream& os, const P1Value& v);

} // namespace ecpat
