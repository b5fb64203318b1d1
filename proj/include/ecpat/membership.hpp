// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>

#include "ecpat/curve.hpp"
#include "ecpat/maps.hpp"

namespace ecpat {

// Exact square test: p/q reduced is a square iff p >= 0 and both p and q
// are perfect integer squares. Returns the nonnegative root.
std::optional<Rational> is_square(const Rational& r);

// The rational y with (x0, y) on E: zero, one or two values depending on
// whether the fiber discriminant is a negative, zero or positive square.
std::set<Rational> y_candidates(const Curve& e, const Rational& x0);

// Decides v in g(E(Q)) by solving the fiber over v; returns a witness
// point when the answer is yes.
std::optional<CurvePoint> g_membership(const Curve& e, const CoordinateMap& g, const P1Value& v);

// All affine points with x = m/e^2, gcd(m, e) = 1, e <= den_bound and
// |m| <= num_bound * e^2 on the cleared integral model, mapped back;
// the identity is always included.
std::set<CurvePoint> naive_point_search(const Curve& e, long num_bound, long den_bound);

} // namespace ecpat
