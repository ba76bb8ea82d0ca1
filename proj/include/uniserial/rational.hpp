#pragma once

#include <gmpxx.h>

#include <string>

#include "uniserial/errors.hpp"

namespace uniserial {

// Exact field scalar. mpq_class keeps values canonical (denominator > 0,
// gcd(|num|, den) = 1, zero is 0/1) as long as every entry point canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional leading '-' on p only.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw InputError("bad rational literal '" + s + "'");
    bool seen_slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (seen_slash || j == i || j + 1 == s.size())
                throw InputError("bad rational literal '" + s + "'");
            seen_slash = true;
        } else if (s[j] < '0' || s[j] > '9') {
            throw InputError("bad rational literal '" + s + "'");
        }
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
    return x.get_str();
}

} // namespace uniserial
