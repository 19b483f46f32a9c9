#pragma once

#include <functional>
#include <map>

#include "gve/cut.hpp"
#include "gve/graded_map.hpp"

namespace gve {

// Grade-indexed twist: grade r acts by the index shift r * rate.
// rate 0 is the trivial action (required for line value groups).
struct SigmaAction {
    Rational rate{0};
    GroupAutomorphism at(const Rational& grade) const { return GroupAutomorphism(grade * rate); }
    bool operator==(const SigmaAction& o) const = default;
};

// Value linear in the grade variable: c0 + c1 * r.
struct LinearPi {
    PiLinear c0;
    PiLinear c1;
    PiLinear at(const Rational& r) const { return c0 + c1.scaled(r); }
    bool operator==(const LinearPi& o) const = default;
};

struct LinearRat {
    Rational c0{0};
    Rational c1{0};
    Rational at(const Rational& r) const { return c0 + c1 * r; }
    bool operator==(const LinearRat& o) const = default;
};

// Grade-parametric cut: fixed-slot head entries with grade-linear values,
// window cutoff grade-linear. Openness is resolved by canonicalization, so
// `strict = false` pieces close exactly at the grades where the boundary is
// attained.
struct CutTemplate {
    Window::Kind win_kind = Window::All;
    LinearRat win_y;
    std::vector<std::pair<Slot, LinearPi>> head;
    bool strict = false;

    Cut instantiate(const ValueGroup& g, const Rational& r) const;
    bool operator==(const CutTemplate& o) const = default;
};

struct CutRulePiece {
    enum Cond { Zero, Pos, Neg, InH, NotInH, Any };
    Cond cond = Any;
    CutTemplate tmpl;
    bool matches(const Rational& r, const std::optional<Rational>& h0) const;
};

const char* to_string(CutRulePiece::Cond c);

struct TableRows {
    std::map<Rational, Cut> rows;
};

struct ClosedFormData {
    Cut W;
    ValueVector b_val;                 // v(b); v(b^{-1}) generates J(W)
    GradedMap f;
    ValueVector alpha_base;            // alpha_r = r * alpha_base
    std::optional<TableRows> exceptional;  // rows keyed by grade, on kZ
};

// Subgroup-pinned family: on H = h0 Z the cuts are translates by the
// twisted-product powers of c_{h0}; off H a piecewise rule applies.
struct HRuleData {
    Rational h0{1};
    ValueVector c_base;  // value of c_{h0}
    Cut W;               // ring whose translates the companion uses
    std::vector<CutRulePiece> off_h;
    bool companion = false;  // false: A_s = V c_s on H+; true: J(W) c_s / W c_{-s}

    // c_{j h0} by the twisted recursion c_{r+s} = c_r c_s^{sigma(r)}.
    ValueVector c_value(const SigmaAction& sigma, long j) const;
};

// A graded family r -> A_r with A_0 = V, in one of three presentations.
struct GradedFamily {
    ValueGroup group;
    SigmaAction sigma;
    std::optional<Rational> subgroup_h0;   // declared H = h0 Z
    std::optional<Rational> designated_t;  // grade with O_l(A_t) = W

    std::optional<ClosedFormData> closed_form;
    std::vector<CutRulePiece> pieces;
    std::optional<TableRows> table;
    std::optional<HRuleData> h_rule;

    Cut at(const Rational& r) const;
    bool in_h(const Rational& r) const;

    // Default verification grid plus every grade the instance names.
    std::vector<Rational> default_grid(int max_num = 6, int max_den = 6) const;
};

struct AxiomViolation {
    int axiom = 0;  // 2 or 3
    Rational g;
    Rational h;
    std::string detail;
};

struct AxiomReport {
    bool ok = true;
    std::optional<AxiomViolation> violation;
    int pairs_checked = 0;
    std::string text() const;
};

// Pairing and product closure over the grid:
//  (ii)  the reflected complement of A_g is contained in A_{-g};
//  (iii) A_g * twist_g(A_h) is contained in A_{g+h} for in-grid sums.
// The grid must be closed under negation and contain 0.
AxiomReport check_axioms(const GradedFamily& F, const std::vector<Rational>& grid);

}  // namespace gve
