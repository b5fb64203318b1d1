// SPDX-License-Identifier: Apache-2.0
#include "ecpat/verify.hpp"

namespace ecpat {

namespace {

// Curve 234446.a1: fifteen small x-coordinates of rational points, the
// ten of them that survive shifting by 1, and the four that survive
// doubling.
const std::string kBremner234446 = R"({
  "curve": {"a": ["1", "-1", "0", "-79", "289"], "label": "234446.a1", "rank": 4},
  "x_values": ["-10", "-9", "-8", "-7", "-4", "0", "1", "3", "4", "5", "6", "7", "8", "12", "13"],
  "shift_claims": [
    {"a": "1", "set": ["-10", "-9", "-8", "0", "3", "4", "5", "6", "7", "12"], "exact": true}
  ],
  "scaling_claims": [
    {"q": "2", "exclude_fixed": true, "set": ["-4", "3", "4", "6"], "exact": true}
  ]
})";

// Curve 5077.a1: six rational points whose x-coordinates form one orbit
// segment of the quadratic map F(t) = -t^2/6 - 7t/6 + 2.
const std::string kOrbit5077 = R"({
  "curve": {"a": ["0", "0", "1", "-7", "6"], "label": "5077.a1", "rank": 3},
  "points": [
    {"x": "0", "y": "2"},
    {"x": "2", "y": "0"},
    {"x": "-1", "y": "3"},
    {"x": "3", "y": "3"},
    {"x": "-3", "y": "0"},
    {"x": "4", "y": "6"}
  ],
  "orbit_claims": [
    {
      "map": {"num": ["2", "-7/6", "-1/6"], "den": ["1"]},
      "sequence": ["0", "2", "-1", "3", "-3", "4"],
      "expect_longest": 6
    }
  ]
})";

} // namespace

std::vector<std::string> fixture_names() { return {"bremner-234446", "orbit-5077"}; }

const std::string* fixture_text(const std::string& name) {
    if (name == "bremner-234446") return &kBremner234446;
    if (name == "orbit-5077") return &kOrbit5077;
    return nullptr;
}

} // namespace ecpat
