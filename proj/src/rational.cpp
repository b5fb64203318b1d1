// SPDX-License-Identifier: Apache-2.0
#include "ecpat/rational.hpp"

#include <cctype>
#include <ostream>

namespace ecpat {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) throw parse_error("bad rational: '" + text + "'");
        return Rational(mpz_class(text));
    }
    std::string n = text.substr(0, slash);
    std::string d = text.substr(slash + 1);
    if (!valid_integer_token(n) || !valid_integer_token(d))
        throw parse_error("bad rational: '" + text + "'");
    mpz_class den(d);
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
    return Rational(mpz_class(n), den);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

P1Value P1Value::parse(const std::string& text) {
    if (text == "inf") return P1Value::infinity();
    return P1Value(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const P1Value& v) { return os << v.to_string(); }

} // namespace ecpat
