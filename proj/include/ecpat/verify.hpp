// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ecpat/json_io.hpp"

namespace ecpat {

// Certificate verification. A certificate bundles a curve with claims:
//
//   {"curve": {...},
//    "points":  [point...],                    points lie on the curve
//    "x_values": ["v",...],                    values lie in x(E(Q))
//    "shift_claims":   [{"a": "1", "set": [...], "exact": bool}],
//    "scaling_claims": [{"q": "2", "exclude_fixed": bool,
//                        "set": [...], "exact": bool}],
//    "orbit_claims":   [{"map": {...}, "sequence": [...],
//                        "expect_longest"?: int}]}
//
// The ambient value set is the union of x_values and the x-coordinates
// of the listed points. Shift and scaling claims compare the claimed set
// against the computed one (equality when "exact", containment
// otherwise). Orbit claims replay the recurrence, check membership, and
// optionally pin the detector's result.
//
// Each completed check is handed to the sink as one JSON object; the
// first failure throws verification_error after reporting it.

struct VerifySummary {
    size_t checks = 0;
};

using CheckSink = std::function<void(const json&)>;

VerifySummary verify_certificate(const json& certificate, const CheckSink& sink);

// Bundled example certificates.
std::vector<std::string> fixture_names();
const std::string* fixture_text(const std::string& name);

} // namespace ecpat
