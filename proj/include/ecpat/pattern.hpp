// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecpat/maps.hpp"
#include "ecpat/subgroup.hpp"

namespace ecpat {

enum class PatternKind { AP, GP, Orbit, AdditiveShift, MultiplicativeShift, Intersection };

std::string pattern_kind_name(PatternKind k);

// A found pattern: the witness sequence, the parameter that generates it
// (difference, ratio, or map), and, once a rank is known, the lower bound
// length^(1/(1+rank)) that any admissible uniformity constant must meet.
struct PatternReport {
    PatternKind kind;
    size_t length = 0;
    std::vector<P1Value> witnesses;
    std::optional<std::variant<Rational, OrbitMap>> parameter;
    std::optional<double> implied_constant;
    std::optional<int> rank;
    std::optional<std::string> rank_basis;  // "declared" or "generator-count"
};

// Longest v, v+a, ..., v+(n-1)a inside X with a > 0; ties prefer the
// smallest difference, then the smallest start. X finite-only, nonempty.
PatternReport longest_ap(const ValueSet& x);

// Longest v, vq, ..., vq^(n-1) inside X minus 0 with q outside {0,1,-1};
// the ratio is normalized to |q| > 1, ties prefer the smallest such q,
// then the smallest start.
PatternReport longest_gp(const ValueSet& x);

// Longest chain of distinct values of X with each step applying F.
PatternReport longest_orbit(const ValueSet& x, const OrbitMap& f);

// { v in X : v + a in X }: the largest S with S and S + a inside X.
ValueSet shift_intersection(const ValueSet& x, const Rational& a);

// { v in X : q v in X }, dropping the fixed point 0 when asked.
ValueSet scaling_intersection(const ValueSet& x, const Rational& q, bool exclude_fixed);

// The nonzero a maximizing |shift_intersection(X, a)|, by counting
// pairwise differences; ties prefer the smallest positive a.
std::pair<Rational, ValueSet> best_additive_shift(const ValueSet& x);

// n^(1/(1+rank)) rounded to 6 decimal places.
double implied_constant(long n, int rank);

// Witnesses reproduce the declared recurrence step by step; shift-style
// reports also need the ambient set to check containment.
bool report_replays(const PatternReport& report, const ValueSet* ambient = nullptr);

} // namespace ecpat
