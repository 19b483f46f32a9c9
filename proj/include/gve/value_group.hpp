#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gve/pilinear.hpp"

namespace gve {

// Position in a lexicographically ordered value group. The Z slot (grading
// exponent) precedes every Y slot; Y slots are indexed by rationals and
// ordered by index, smaller index more significant.
struct Slot {
    enum Level : int { Z = 0, Y = 1 };
    Level level = Y;
    Rational pos{0};

    static Slot z() { return {Z, Rational(0)}; }
    static Slot y(Rational p) { return {Y, std::move(p)}; }

    friend bool operator==(const Slot& a, const Slot& b) { return a.level == b.level && a.pos == b.pos; }
    friend bool operator<(const Slot& a, const Slot& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.pos < b.pos;
    }
};

std::string to_string(const Slot& s);

// Per-slot sublattice of R the group draws entries from.
enum class SlotLattice {
    Integers,        // Z
    Rationals,       // Q
    RationalsPlusPi  // Q + (step*Z)*pi
};

enum class GroupKind { RationalLine, PiLine, LexVector };

// A totally ordered value group: a line (single Y slot) or the lexicographic
// sum over {Z} + Q-many Y slots, with finitely supported elements.
struct ValueGroup {
    GroupKind kind = GroupKind::RationalLine;
    SlotLattice line_lattice = SlotLattice::Rationals;  // lines only
    SlotLattice y_default = SlotLattice::RationalsPlusPi;
    Rational pi_step{1};  // pi coefficients live in (pi_step)*Z
    std::map<Rational, SlotLattice> y_overrides;

    static ValueGroup rational_line(bool discrete = false);
    static ValueGroup pi_line(Rational pi_step = Rational(1));
    static ValueGroup lex(Rational pi_step = Rational(1));

    bool is_line() const { return kind != GroupKind::LexVector; }
    SlotLattice lattice_at(const Slot& s) const;
    // Whether a value is an entry the group actually contains at this slot.
    bool attained(const Slot& s, const PiLinear& v) const;

    bool operator==(const ValueGroup& o) const = default;
};

// Finitely supported element of a value group: sorted (slot, value) pairs
// with no zero values.
struct ValueVector {
    std::vector<std::pair<Slot, PiLinear>> entries;

    ValueVector() = default;
    static ValueVector single(Slot s, PiLinear v);

    bool is_zero() const { return entries.empty(); }
    PiLinear at(const Slot& s) const;
    void set(const Slot& s, const PiLinear& v);  // erases on zero
    Rational z_part() const;                     // 0 when no Z entry

    ValueVector operator+(const ValueVector& o) const;
    ValueVector operator-() const;
    ValueVector operator-(const ValueVector& o) const { return *this + (-o); }
    ValueVector scaled(const Rational& r) const;

    bool operator==(const ValueVector& o) const = default;
};

// Order-preserving index translation: Y slot at index i moves to i - t.
// Z entries are untouched. Composition adds offsets.
struct GroupAutomorphism {
    Rational shift{0};
    GroupAutomorphism() = default;
    explicit GroupAutomorphism(Rational t) : shift(std::move(t)) {}
    GroupAutomorphism then(const GroupAutomorphism& o) const { return GroupAutomorphism(shift + o.shift); }
    bool is_identity() const { return shift == Rational(0); }
};

// Lexicographic comparison, most significant slot first.
Ordering vec_cmp(const ValueVector& a, const ValueVector& b);

inline bool vec_less(const ValueVector& a, const ValueVector& b) { return vec_cmp(a, b) == Ordering::Less; }

ValueVector vec_twist(const ValueVector& v, const GroupAutomorphism& tau);

// Membership of every entry in the group's lattice.
bool vec_attained(const ValueGroup& g, const ValueVector& v);

// Validates shape: lines may only populate slot Y(0) (no Z).
void validate_vector(const ValueGroup& g, const ValueVector& v);

std::string to_string(const ValueVector& v);

}  // namespace gve
