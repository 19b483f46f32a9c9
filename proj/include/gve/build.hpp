#pragma once

#include "gve/classify.hpp"

namespace gve {

// Constructs the closed-form family A_r = W b^{f(r)} alpha_r (kind II,
// letter e). Validates that v(b^{-1}) generates J(W), that f is a nonzero
// graded map, and that alpha is a grade homomorphism compatible with W.
//
// When W != V and f has a zero-sum period k, the caller must supply the
// exceptional sub-family on kZ; each supplied row is checked against the
// strict sandwich W b^{f(jk)-1} alpha_jk < A_jk < W b^{f(jk)} alpha_jk and
// the sub-family itself must pass the extension axioms on kZ.
//
// The result is re-verified through check_axioms before being returned.
GradedFamily build_type_e(const ValueGroup& group, const SigmaAction& sigma, const Cut& W,
                          const ValueVector& b_val, const GradedMap& f,
                          const ValueVector& alpha_base,
                          std::optional<TableRows> exceptional = std::nullopt);

// Same construction driven by a finite table for f; the table must pass the
// graded-map axioms on its own domain (this is the rejection path for
// corrupted map data). The result is a table family over the map's domain.
GradedFamily build_type_e_from_table(const ValueGroup& group, const SigmaAction& sigma,
                                     const Cut& W, const ValueVector& b_val,
                                     const GradedMapTable& f, const ValueVector& alpha_base);

struct TypeHData {
    std::optional<Rational> h0;        // H = h0 Z; nullopt encodes H = Q (rejected)
    ValueVector c_base;                // value of c_{h0}
    std::vector<CutRulePiece> off_h;   // rule for grades outside H
    std::optional<Rational> designated_t;
};

// Assembled family plus its companion M (kind II, letter h).
struct TypeHResult {
    GradedFamily A;
    GradedFamily M;
};

// Builds the subgroup-pinned family: A_s = V c_s on H+ with the reflected
// negative side, the supplied rule off H. Required: J(W) idempotent and not
// principal, H nonzero proper, c a twisted grade homomorphism on H, and
// off-H cuts closure-stable, W-stable and non-principal. Both A and the
// companion M = V + W c_{-s} + J(W) c_s + A_offH are verified through
// check_axioms.
TypeHResult build_type_h(const ValueGroup& group, const SigmaAction& sigma, const Cut& W,
                         const TypeHData& data);

struct SupDiagnostics {
    std::vector<Int> g_values;  // slice nice-map values at r, n = 1..N
    std::vector<Int> h_values;  // dual slice values at r
    Int l_estimate{0};          // running maximum of g
    Int k_max{0};               // running maximum of h
    bool l_stabilized = false;
    bool k_diverging = false;   // certified by the linear lower bound
};

// Nice-map growth data g_{1/(nq)}(r), h_{1/(nq)}(r) computed from a
// closed-form family's own graded map, with the linear lower-bound
// certificate h_n >= n*num(r) - l - 1 for the dual side.
SupDiagnostics sup_diagnostics(const GradedFamily& F, const Rational& r, int n_sup);

}  // namespace gve
