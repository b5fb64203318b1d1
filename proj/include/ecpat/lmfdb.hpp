// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ecpat/json_io.hpp"

namespace ecpat {

// Client for the public LMFDB JSON API. Everything else in the tool is
// offline; this is the only code that touches the network.

bool lmfdb_label_valid(const std::string& label);

// GET {base_url}/api/ec_curvedata/?lmfdb_label={label}&_format=json plus
// a best-effort /api/ec_mwbsd/ lookup for generators. Returns a curve
// file object: {"a": [...], "label": ..., "rank"?: ..., "generators"?: [...]}.
json lmfdb_fetch_curve(const std::string& label,
                       const std::string& base_url = "http://www.lmfdb.org");

// Parsers split out so the wire handling is testable without a network.
json lmfdb_curve_from_api(const std::string& label, const json& curvedata_response,
                          const json* mwbsd_response);

} // namespace ecpat
