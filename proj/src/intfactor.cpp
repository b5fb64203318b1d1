// SPDX-License-Identifier: Apache-2.0
#include "ecpat/intfactor.hpp"

#include <algorithm>

#include "ecpat/errors.hpp"

namespace ecpat {

namespace {

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Pollard-Brent rho. n odd composite, not a prime power of a tiny prime.
mpz_class rho_factor(const mpz_class& n, gmp_randclass& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x = y, ys = y, q = 1, g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x - y) % n + n) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class d = ((x - ys) % n + n) % n;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out, gmp_randclass& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = rho_factor(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

} // namespace

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
    if (n == 0) throw error("factorize(0)");
    mpz_class m = abs(n);
    std::map<mpz_class, unsigned> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[mpz_class(static_cast<long>(p))];
            m /= static_cast<long>(p);
        }
    }
    unsigned long p = 17;
    while (m > 1 && mpz_class(p) * p <= m && p < 100000) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[mpz_class(static_cast<long>(p))];
            m /= static_cast<long>(p);
        }
        p += 2;
    }
    if (m > 1) {
        static gmp_randclass rng(gmp_randinit_default);
        factor_into(m, out, rng);
    }
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    auto fac = factorize(n);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> square_divisors(const mpz_class& n) {
    auto fac = factorize(n);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        unsigned half = e / 2;
        if (half == 0) continue;
        size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= half; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<mpz_class> perfect_sqrt(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace ecpat
