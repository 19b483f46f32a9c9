#include "gve/pilinear.hpp"

#include <cctype>

#include "gve/pi.hpp"

namespace gve {

namespace {

int sign_rat(const Rational& q) {
    if (q > Rational(0)) return 1;
    if (q < Rational(0)) return -1;
    return 0;
}

}  // namespace

int sign(const PiLinear& x) {
    if (x.b == Rational(0)) return sign_rat(x.a);
    // a + b*pi with b != 0 is never zero; refine until the interval
    // [a + b*lo, a + b*hi] (endpoints swapped for b < 0) excludes zero.
    std::uint64_t bits = 8;
    for (;;) {
        PiInterval pi = pi_enclosure::with_bits(bits);
        Rational lo = x.a + x.b * (x.b > Rational(0) ? pi.lo : pi.hi);
        Rational hi = x.a + x.b * (x.b > Rational(0) ? pi.hi : pi.lo);
        if (lo > Rational(0)) return 1;
        if (hi < Rational(0)) return -1;
        bits *= 2;
    }
}

Ordering pilinear_cmp(const PiLinear& x, const PiLinear& y) {
    if (x == y) return Ordering::Equal;
    int s = sign(x - y);
    return s > 0 ? Ordering::Greater : Ordering::Less;
}

Int floor_pilinear(const PiLinear& x) {
    if (x.is_rational()) return floor_int(x.a);
    // Irrational, so never an integer: shrink the enclosure until both ends
    // share a floor.
    std::uint64_t bits = 8;
    for (;;) {
        PiInterval pi = pi_enclosure::with_bits(bits);
        Rational lo = x.a + x.b * (x.b > Rational(0) ? pi.lo : pi.hi);
        Rational hi = x.a + x.b * (x.b > Rational(0) ? pi.hi : pi.lo);
        Int flo = floor_int(lo), fhi = floor_int(hi);
        if (flo == fhi) return flo;
        bits *= 2;
    }
}

Int floor_mul(const Rational& r, const PiLinear& d) { return floor_pilinear(d.scaled(r)); }

std::string to_string(const PiLinear& x) {
    if (x.b == Rational(0)) return to_string(x.a);
    std::string pi_part;
    if (x.b == Rational(1)) pi_part = "pi";
    else if (x.b == Rational(-1)) pi_part = "-pi";
    else pi_part = to_string(x.b) + "*pi";
    if (x.a == Rational(0)) return pi_part;
    if (x.b > Rational(0)) return to_string(x.a) + " + " + (x.b == Rational(1) ? "pi" : to_string(x.b) + "*pi");
    Rational nb = -x.b;
    return to_string(x.a) + " - " + (nb == Rational(1) ? "pi" : to_string(nb) + "*pi");
}

PiLinear parse_pilinear(const std::string& text) {
    // Grammar: term (('+'|'-') term)*, term: RAT | RAT '*' 'pi' | 'pi'.
    PiLinear acc;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&] { throw ValidationError("malformed pi-linear value: '" + text + "'"); };
    bool first = true;
    skip();
    if (i == text.size()) fail();
    while (true) {
        skip();
        if (i == text.size()) {
            if (first) fail();
            break;
        }
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sgn = -1;
            ++i;
            skip();
        } else if (!first) {
            fail();
        }
        if (i + 1 < text.size() && text[i] == 'p' && text[i + 1] == 'i') {
            i += 2;
            acc.b += Rational(sgn);
        } else {
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            if (j == i) fail();
            Rational q = parse_rational(text.substr(i, j - i));
            i = j;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
                if (i + 1 >= text.size() || text[i] != 'p' || text[i + 1] != 'i') fail();
                i += 2;
                acc.b += Rational(sgn) * q;
            } else {
                acc.a += Rational(sgn) * q;
            }
        }
        first = false;
    }
    return acc;
}

}  // namespace gve
