// SPDX-License-Identifier: Apache-2.0
#include "ecpat/poly.hpp"

#include <algorithm>
#include <cassert>

#include "ecpat/errors.hpp"
#include "ecpat/intfactor.hpp"

namespace ecpat {

UniPoly UniPoly::monomial(size_t deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p = one();
    for (const Rational& r : roots)
        p = p * UniPoly(std::vector<Rational>{-r, Rational(1)});
    return p;
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw zero_polynomial_error();
    return c_.back();
}

Rational UniPoly::eval(const Rational& v) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::make_monic() const {
    if (is_zero()) throw zero_polynomial_error();
    return scaled(leading().reciprocal());
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw zero_polynomial_error();
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {zero(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    Rational inv_lead = b.leading().reciprocal();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = r[k + db] * inv_lead;
        if (c.is_zero()) continue;
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[k + i] -= c * b.c_[i];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::divexact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = a == Rational(1);
        if (i == 0)
            out += a.to_string();
        else {
            if (!unit) out += a.to_string() + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw zero_polynomial_error();
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = UniPoly::divrem(x, y);
        x = y;
        y = r;
    }
    return x.make_monic();
}

Rational poly_eval(const UniPoly& p, const Rational& v) { return p.eval(v); }

std::set<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    std::set<Rational> out;
    // strip t^k so that root 0 is handled first
    size_t k = 0;
    while (p.coeff(k).is_zero()) ++k;
    if (k > 0) out.insert(Rational(0));
    std::vector<Rational> c(p.coeffs().begin() + k, p.coeffs().end());
    if (c.size() <= 1) return out;

    // clear denominators to primitive integer coefficients
    mpz_class l = 1;
    for (const Rational& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    std::vector<mpz_class> z(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        mpq_class scaled = c[i].raw() * mpq_class(l);
        z[i] = scaled.get_num();
    }
    mpz_class g = 0;
    for (const mpz_class& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (mpz_class& v : z) v /= g;

    auto num_divs = divisors(z.front());
    auto den_divs = divisors(z.back());
    for (const mpz_class& u : num_divs) {
        for (const mpz_class& v : den_divs) {
            if (gcd(u, v) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(s > 0 ? u : mpz_class(-u), v);
                if (p.eval(cand).is_zero()) out.insert(cand);
            }
        }
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) return UniPoly::one();
    UniPoly g = poly_gcd(p, p.derivative());
    return UniPoly::divexact(p, g).make_monic();
}

namespace {

// Determinant by Gaussian elimination with exact rational pivots.
Rational determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col].reciprocal();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] * inv;
            for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

// Sylvester determinant for coefficient rows pa (formal degree da) and pb
// (formal degree db); pa/pb are constant-first and padded to length da+1,
// db+1 by the caller.
Rational sylvester_det(const std::vector<Rational>& pa, int da,
                       const std::vector<Rational>& pb, int db) {
    size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int row = 0; row < db; ++row)
        for (int j = 0; j <= da; ++j) m[row][row + j] = pa[da - j];
    for (int row = 0; row < da; ++row)
        for (int j = 0; j <= db; ++j) m[db + row][row + j] = pb[db - j];
    return determinant(std::move(m));
}

std::vector<Rational> padded(const UniPoly& p, int formal_degree) {
    std::vector<Rational> v(formal_degree + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) v[i] = p.coeff(i);
    return v;
}

UniPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    UniPoly acc = UniPoly::zero();
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::one();
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(std::vector<Rational>{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis.scaled(ys[i] / denom);
    }
    return acc;
}

} // namespace

Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw zero_polynomial_error();
    int da = a.degree(), db = b.degree();
    if (da == 0 && db == 0) return Rational(1);
    if (da == 0) {
        Rational r(1);
        for (int i = 0; i < db; ++i) r *= a.coeff(0);
        return r;
    }
    if (db == 0) {
        Rational r(1);
        for (int i = 0; i < da; ++i) r *= b.coeff(0);
        return r;
    }
    return sylvester_det(padded(a, da), da, padded(b, db), db);
}

UniPoly elimination_resultant(const UniPoly& a, const UniPoly& num, const UniPoly& den) {
    if (a.is_zero() || num.is_zero()) throw zero_polynomial_error();
    int da = a.degree();
    int mt = std::max(num.degree(), den.degree());
    if (da == 0 || mt == 0) return UniPoly::one();

    // Evaluating the symbolic Sylvester determinant commutes with
    // substituting a value for v, so sample at da+1 points and interpolate;
    // the determinant has v-degree at most da (one linear entry per a-row).
    std::vector<Rational> xs, ys;
    for (int s = 0; s <= da; ++s) {
        Rational v(static_cast<long>(s));
        std::vector<Rational> pv = padded(num, mt);
        for (int i = 0; i <= den.degree(); ++i) pv[i] -= v * den.coeff(i);
        xs.push_back(v);
        ys.push_back(sylvester_det(pv, mt, padded(a, da), da));
    }
    return lagrange_interpolate(xs, ys);
}

} // namespace ecpat
