#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "devlat/errors.hpp"

namespace devlat {

// GMP rationals are kept canonical (reduced, positive denominator) by
// every mpq_class operation; only set_str needs an explicit canonicalize.
using Rational = mpq_class;

using Point = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// mpq_class(num, den) leaves the fraction unreduced, which breaks ==.
inline Rational ratio(long num, long den) {
    if (den == 0) throw InputError("zero denominator");
    Rational q(num, 1);
    q /= den;
    return q;
}

/// Accepts "p", "-p", "p/q" and "-p/q" with decimal digits.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false, digits = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digits = true;
        } else {
            throw InputError("malformed rational '" + s + "'");
        }
    }
    if (!digits) throw InputError("malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string point_to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

} // namespace devlat
