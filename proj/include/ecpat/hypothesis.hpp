// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "ecpat/curve.hpp"
#include "ecpat/maps.hpp"

namespace ecpat {

// A subset of P^1(C) stable under complex conjugation: the monic
// squarefree polynomial whose complex roots are the finite members, plus
// a flag for infinity. Root-set equality is plain identity of canonical
// polynomials.
struct BranchSet {
    UniPoly locus = UniPoly::one();
    bool contains_infinity = false;

    size_t total_count() const {
        return static_cast<size_t>(locus.degree()) + (contains_infinity ? 1 : 0);
    }
    std::string to_string() const {
        return "{roots of " + locus.to_string() + (contains_infinity ? "} + inf" : "}");
    }
};

// Branch values of the x-coordinate map: the three roots of the
// 2-division cubic together with infinity.
BranchSet branch_set_x(const Curve& e);

// Set-image of a branch set under an invertible fractional-linear map.
BranchSet mobius_image_branch_set(const BranchSet& b, const MobiusMap& m);

bool branch_sets_equal(const BranchSet& b1, const BranchSet& b2);

// The degree-4 map F with F(x(P)) = x(2P):
//   (t^4 - b4 t^2 - 2 b6 t - b8) / (4 t^3 + b2 t^2 + 2 b4 t + b6)
RationalFunction lattes_duplication(const Curve& e);

// Branch values of a non-constant F: P^1 -> P^1, exactly.
BranchSet ratfunc_branch_set(const RationalFunction& f);

// Set-image F(B) of a branch set under a non-constant rational map.
BranchSet ratfunc_image_branch_set(const BranchSet& b, const RationalFunction& f);

enum class HypothesisStatus { Satisfied, Violated, Unknown };

std::string hypothesis_status_name(HypothesisStatus s);

struct HypothesisVerdict {
    HypothesisStatus status = HypothesisStatus::Unknown;
    std::string reason;
    std::optional<BranchSet> branch_g;
    std::optional<BranchSet> branch_fg;
};

// Does g versus F o g satisfy the distinct-branch-value hypothesis?
//  (1) F an infinite-order fractional-linear map: satisfied outright —
//      any non-constant map from the curve is branched over at least 3
//      values and a fractional-linear map permuting them has finite order.
//  (2) F fractional-linear of finite order and branch(g) computable
//      (base x with identity or invertible degree-1 post): compare
//      branch(g) against its F-image.
//  (3) F a general rational map and g the bare x-coordinate: compute
//      branch(F o g) = F(branch g) union branch(F) and compare.
//  (4) anything else: unknown rather than an unproven verdict.
HypothesisVerdict check_pattern_hypothesis(const Curve& e, const CoordinateMap& g,
                                           const OrbitMap& f);

} // namespace ecpat
