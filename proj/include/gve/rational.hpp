#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <sstream>
#include <string>

#include "gve/error.hpp"

namespace gve {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

inline Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// Floor division toward -infinity; exact for all signs.
inline Int floor_int(const Rational& q) {
    Int n = q.numerator(), d = q.denominator();
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Rational abs(const Rational& q) { return q < Rational(0) ? -q : q; }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return q.numerator().str();
    return q.numerator().str() + "/" + q.denominator().str();
}

// Parses "p" or "p/q"; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw ValidationError("malformed rational: '" + text + "'"); };
    std::string s = text;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0);
}

}  // namespace gve
