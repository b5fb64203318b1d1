// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace ecpat {

// Prime factorization of |n|, n != 0. Trial division for small factors,
// Pollard-Brent rho for the rest; Miller-Rabin decides primality.
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

// All positive divisors of |n|, sorted. n != 0.
std::vector<mpz_class> divisors(const mpz_class& n);

// Positive d with d^2 dividing |n|, sorted. n != 0.
std::vector<mpz_class> square_divisors(const mpz_class& n);

// Exact integer square root when n is a perfect square.
std::optional<mpz_class> perfect_sqrt(const mpz_class& n);

} // namespace ecpat
