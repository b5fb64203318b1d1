// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ecpat {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_polynomial_error : error {
    zero_polynomial_error() : error("operation undefined for the zero polynomial") {}
};

struct singular_curve_error : error {
    singular_curve_error() : error("discriminant vanishes: the Weierstrass equation is singular") {}
};

struct singular_map_error : error {
    singular_map_error() : error("determinant vanishes: the fractional-linear map is not invertible") {}
};

struct generator_not_on_curve_error : error {
    explicit generator_not_on_curve_error(const std::string& what) : error(what) {}
};

struct empty_set_error : error {
    explicit empty_set_error(const std::string& what = "empty value set") : error(what) {}
};

struct zero_shift_error : error {
    zero_shift_error() : error("shift amount must be nonzero") {}
};

struct bad_ratio_error : error {
    bad_ratio_error() : error("scaling ratio must avoid 0, 1 and -1") {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

struct verification_error : error {
    explicit verification_error(const std::string& what) : error(what) {}
};

struct network_error : error {
    explicit network_error(const std::string& what) : error(what) {}
};

struct unknown_label_error : error {
    explicit unknown_label_error(const std::string& what) : error(what) {}
};

struct schema_error : error {
    explicit schema_error(const std::string& what) : error(what) {}
};

} // namespace ecpat
