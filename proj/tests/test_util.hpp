// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <set>
#include <vector>

#include "ecpat/rational.hpp"
#include "ecpat/subgroup.hpp"

namespace ecpat::testutil {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long num_bound, long den_bound) {
    long d = rand_int(rng, 1, den_bound);
    return Rational(rand_int(rng, -num_bound, num_bound), d);
}

inline Rational rand_nonzero_rational(Rng& rng, long num_bound, long den_bound) {
    while (true) {
        Rational r = rand_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

inline ValueSet rand_value_set(Rng& rng, size_t max_size, long num_bound, long den_bound) {
    ValueSet x;
    x.provenance = "random";
    size_t target = static_cast<size_t>(rand_int(rng, 1, static_cast<long>(max_size)));
    while (x.values.size() < target)
        x.values.insert(P1Value(rand_rational(rng, num_bound, den_bound)));
    return x;
}

} // namespace ecpat::testutil
