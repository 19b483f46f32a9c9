#pragma once

#include <compare>
#include <string>

#include "gve/rational.hpp"

namespace gve {

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "?";
}

// Exact number a + b*pi with rational a, b. Since pi is irrational the
// representation is unique and the real-number order is decidable by
// refining a rational enclosure of pi.
struct PiLinear {
    Rational a{0};
    Rational b{0};

    PiLinear() = default;
    PiLinear(Rational a_) : a(std::move(a_)) {}
    PiLinear(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a == Rational(0) && b == Rational(0); }
    bool is_rational() const { return b == Rational(0); }

    PiLinear operator-() const { return {-a, -b}; }
    PiLinear operator+(const PiLinear& o) const { return {a + o.a, b + o.b}; }
    PiLinear operator-(const PiLinear& o) const { return {a - o.a, b - o.b}; }
    PiLinear scaled(const Rational& r) const { return {a * r, b * r}; }

    bool operator==(const PiLinear& o) const = default;
};

inline PiLinear pilinear_pi(Rational coeff = Rational(1)) { return {Rational(0), std::move(coeff)}; }

// Sign of a + b*pi: -1, 0, +1.
int sign(const PiLinear& x);

Ordering pilinear_cmp(const PiLinear& x, const PiLinear& y);

inline bool operator<(const PiLinear& x, const PiLinear& y) { return pilinear_cmp(x, y) == Ordering::Less; }
inline bool operator>(const PiLinear& x, const PiLinear& y) { return pilinear_cmp(x, y) == Ordering::Greater; }
inline bool operator<=(const PiLinear& x, const PiLinear& y) { return pilinear_cmp(x, y) != Ordering::Greater; }
inline bool operator>=(const PiLinear& x, const PiLinear& y) { return pilinear_cmp(x, y) != Ordering::Less; }

// floor(r*d), exact. Rational products use exact floor division; irrational
// ones are pinned by interval refinement (they are never integers).
Int floor_mul(const Rational& r, const PiLinear& d);

// floor(x) for a single PiLinear value.
Int floor_pilinear(const PiLinear& x);

std::string to_string(const PiLinear& x);

// Accepts forms like "3/2", "pi", "-pi", "2*pi", "1/2 + 3/4*pi", "2 - pi".
PiLinear parse_pilinear(const std::string& text);

}  // namespace gve
