#pragma once

#include <optional>

#include "gve/value_group.hpp"

namespace gve {

// Prefix of the slot ordering that a cut actually compares. Everything at or
// beyond the window edge is absorbed: members may vary freely there. Windows
// realize the +-infinity boundary tails: a ring like W_r = "everything
// nonnegative before Y_r" is the window {slots < Y_r} with zero head.
struct Window {
    enum Kind { LeZ, LtY, LeY, All };
    Kind kind = All;
    Rational y{0};  // cutoff for LtY / LeY

    static Window all() { return {All, Rational(0)}; }
    static Window le_z() { return {LeZ, Rational(0)}; }
    static Window lt_y(Rational q) { return {LtY, std::move(q)}; }
    static Window le_y(Rational q) { return {LeY, std::move(q)}; }

    bool contains(const Slot& s) const;
    bool operator==(const Window& o) const = default;
};

// Total containment order on windows (they are nested prefixes).
bool window_subset(const Window& a, const Window& b);
Window window_intersect(const Window& a, const Window& b);
Window window_twist(const Window& w, const GroupAutomorphism& tau);

// Upward-closed subset of a value group: the value set of a (fractional)
// ideal of the valuation ring. Membership rule:
//
//   x in cut  iff  x|win > head   (strict)
//   x in cut  iff  x|win >= head  (non-strict)
//
// comparing lexicographically over the window's slots. `whole` marks the
// improper ideal (the full ring K); it never appears in family data.
//
// Cuts are kept canonical:
//   - head entries outside the window or with value zero are dropped;
//   - at the first head entry not attained in the group's lattice the window
//     is truncated just past that slot and the cut is marked strict (the
//     boundary is unreachable, so > and >= agree);
//   - if the window has a last slot with an integer lattice, strict cuts are
//     snapped to the closed cut at the least element above the head.
// Structural equality on canonical cuts is set equality.
struct Cut {
    ValueGroup group;
    bool whole = false;
    Window win = Window::all();
    ValueVector head;
    bool strict = false;

    static Cut closed_at(const ValueGroup& g, ValueVector boundary);
    static Cut open_at(const ValueGroup& g, ValueVector boundary);
    static Cut ring(const ValueGroup& g, Window w);  // zero head, non-strict
    static Cut whole_group(const ValueGroup& g);
    static Cut make(const ValueGroup& g, Window w, ValueVector boundary, bool strict);

    Rational z_part() const { return head.z_part(); }
};

// The valuation ring V = {x : v(x) >= 0}.
Cut v_ring(const ValueGroup& g);

void canonicalize(Cut& c);

bool cut_equal(const Cut& a, const Cut& b);
bool cut_member(const Cut& c, const ValueVector& x);
bool cut_subset(const Cut& a, const Cut& b);

// Value-level ideal product. The left factor's Z part conjugates the right
// factor's Y indices before boundaries add, mirroring Z^p a = a^sigma(p) Z^p.
Cut cut_sum(const Cut& a, const Cut& b);

// Principal translate c * <element gamma>.
Cut cut_translate(const Cut& c, const ValueVector& gamma);
// <element gamma> * c (conjugates c by gamma's Z part).
Cut translate_cut(const ValueVector& gamma, const Cut& c);

Cut cut_twist(const Cut& c, const GroupAutomorphism& tau);

// Smallest intersection of principal covers over o_left(c): closes an open
// attained boundary, fixes everything else.
Cut cut_closure(const Cut& c, const Cut& over);

// Left order O_l(c) = {gamma : gamma * c inside c}; always the ring on c's
// window. Guarded by a deterministic sampling cross-check.
Cut o_left(const Cut& c);

// Left residual {gamma : gamma * I inside J}. Serves the right-sided
// residual as well (the twists in caller formulas account for sides).
Cut residual_left(const Cut& J, const Cut& I);

struct PrincipalityResult {
    bool principal = false;
    std::optional<ValueVector> witness;  // v(generator) when principal
};

// Whether c is a principal translate of `over`; requires over == o_left(c).
PrincipalityResult is_principal(const Cut& c, const Cut& over);

// Jacobson radical of a proper ring cut: its strict version.
Cut radical(const Cut& ring);

bool is_idempotent(const Cut& c);

// Value set of the inverses of the nonmembers, twisted for grade g: the cut
// that the pairing axiom compares against the opposite grade. Ring-element
// form: x outside A_g implies (x^sigma(-g))^{-1} in A_{-g}.
Cut complement_reflect(const Cut& c, const Rational& grade, const Rational& sigma_rate);

std::string to_string(const Cut& c);

}  // namespace gve
