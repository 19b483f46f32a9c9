#include "gve/build.hpp"

#include <algorithm>
#include <set>

namespace gve {

namespace {

Cut point(const ValueGroup& g, const ValueVector& v) { return Cut::closed_at(g, v); }

void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

void check_ring_shape(const Cut& W) {
    require(!W.whole, "W must be a proper ring");
    require(W.head.is_zero() && !W.strict, "W must be a ring cut (zero head, closed)");
}

// W alpha_r = alpha_r W^{sigma(r)} and the twisted product rule on samples.
void check_alpha_hom(const ValueGroup& group, const SigmaAction& sigma, const Cut& W,
                     const ValueVector& alpha_base) {
    std::vector<Rational> samples = {rat(1), rat(-1), rat(1, 2), rat(2), rat(-3, 2)};
    for (const Rational& r : samples) {
        ValueVector ar = alpha_base.scaled(r);
        Cut left = cut_sum(W, point(group, ar));
        Cut right = cut_sum(point(group, ar), cut_twist(W, sigma.at(r)));
        require(cut_equal(left, right),
                "alpha is not sigma-compatible with W at grade " + to_string(r));
        for (const Rational& s : samples) {
            ValueVector as = alpha_base.scaled(s);
            Cut prod = cut_sum(left, cut_twist(cut_sum(W, point(group, as)), sigma.at(r)));
            Cut target = cut_sum(W, point(group, alpha_base.scaled(r + s)));
            require(cut_equal(prod, target),
                    "alpha translates do not multiply as a grade homomorphism at (" +
                        to_string(r) + ", " + to_string(s) + ")");
        }
    }
}

void check_b_generates(const ValueGroup& group, const Cut& W, const ValueVector& b_val) {
    Cut J = radical(W);
    Cut expect = cut_sum(W, point(group, -b_val));
    require(cut_equal(J, expect),
            "v(b^{-1}) does not generate J(W): J(W) = " + to_string(J) + " but W b^{-1} = " +
                to_string(expect));
}

}  // namespace

GradedFamily build_type_e(const ValueGroup& group, const SigmaAction& sigma, const Cut& W,
                          const ValueVector& b_val, const GradedMap& f,
                          const ValueVector& alpha_base, std::optional<TableRows> exceptional) {
    require(!f.is_zero_map(), "the graded map of a closed form must be nonzero");
    require(check_graded_map(f, farey_grid(6, 6)).ok, "f is not a graded map");
    check_ring_shape(W);
    check_b_generates(group, W, b_val);
    check_alpha_hom(group, sigma, W, alpha_base);

    bool w_is_v = cut_equal(W, v_ring(group));
    std::optional<Rational> k = smallest_sum_zero(f);

    GradedFamily F;
    F.group = group;
    F.sigma = sigma;
    F.closed_form = ClosedFormData{W, b_val, f, alpha_base, std::nullopt};

    if (w_is_v || !k) {
        require(!exceptional.has_value(),
                "exceptional rows only apply when W != V and f has a zero-sum period");
    } else {
        require(exceptional.has_value(),
                "exceptional sub-family on " + to_string(*k) +
                    "Z is missing (W != V and f has zero-sum period " + to_string(*k) + ")");
        std::set<Rational> grid{Rational(0)};
        for (const auto& [r, cut] : exceptional->rows) {
            require(r != Rational(0), "exceptional rows must not rebind grade 0");
            require(is_integer(r / *k),
                    "exceptional grade " + to_string(r) + " is not a multiple of " + to_string(*k));
            require(exceptional->rows.count(-r), "exceptional rows not closed under negation");
            Int fr = eval(f, r);
            ValueVector ar = alpha_base.scaled(r);
            Cut upper = cut_sum(W, point(group, b_val.scaled(Rational(fr)) + ar));
            Cut lower = cut_sum(W, point(group, b_val.scaled(Rational(fr - 1)) + ar));
            require(cut_subset(lower, cut) && !cut_equal(lower, cut),
                    "sandwich violated from below at grade " + to_string(r));
            require(cut_subset(cut, upper) && !cut_equal(cut, upper),
                    "sandwich violated from above at grade " + to_string(r));
            grid.insert(r);
            grid.insert(-r);
        }
        GradedFamily B;
        B.group = group;
        B.sigma = sigma;
        B.table = *exceptional;
        AxiomReport sub = check_axioms(B, {grid.begin(), grid.end()});
        require(sub.ok, "exceptional sub-family fails the extension axioms; " + sub.text());
        F.closed_form->exceptional = std::move(exceptional);
    }

    AxiomReport rep = check_axioms(F, F.default_grid());
    require(rep.ok, "constructed closed form fails the extension axioms; " + rep.text());
    return F;
}

GradedFamily build_type_e_from_table(const ValueGroup& group, const SigmaAction& sigma,
                                     const Cut& W, const ValueVector& b_val,
                                     const GradedMapTable& f, const ValueVector& alpha_base) {
    std::vector<Rational> domain;
    for (const auto& [r, v] : f.entries) domain.push_back(r);
    MapCheckReport mrep = check_graded_map(f, domain);
    require(mrep.ok, "map table is not a graded map: " + mrep.detail);
    check_ring_shape(W);
    check_b_generates(group, W, b_val);
    check_alpha_hom(group, sigma, W, alpha_base);

    GradedFamily F;
    F.group = group;
    F.sigma = sigma;
    F.table = TableRows{};
    for (const auto& [r, v] : f.entries) {
        Cut row = r == Rational(0)
                      ? v_ring(group)
                      : cut_sum(W, point(group, b_val.scaled(Rational(v)) + alpha_base.scaled(r)));
        F.table->rows.emplace(r, std::move(row));
    }
    AxiomReport rep = check_axioms(F, domain);
    require(rep.ok, "table-driven closed form fails the extension axioms; " + rep.text());
    return F;
}

TypeHResult build_type_h(const ValueGroup& group, const SigmaAction& sigma, const Cut& W,
                         const TypeHData& data) {
    require(data.h0.has_value(), "H must be a proper subgroup, not all of Q");
    require(*data.h0 != Rational(0), "H must be nonzero");
    Rational h0 = abs(*data.h0);

    check_ring_shape(W);
    Cut V = v_ring(group);
    require(cut_subset(V, W) && !cut_equal(V, W), "W must strictly contain V");
    Cut JW = radical(W);
    require(!is_principal(JW, W).principal,
            "J(W) is principal; the subgroup-pinned construction needs an idempotent radical");
    require(is_idempotent(JW), "J(W) must be idempotent");

    GradedFamily A;
    A.group = group;
    A.sigma = sigma;
    A.subgroup_h0 = h0;
    A.designated_t = data.designated_t;
    A.h_rule = HRuleData{h0, data.c_base, W, data.off_h, false};

    // c is a twisted grade homomorphism compatible with W.
    for (long j : {1L, 2L, 3L, -1L, -2L}) {
        ValueVector cj = A.h_rule->c_value(sigma, j);
        Rational s = h0 * Rational(j);
        Cut left = cut_sum(W, point(group, cj));
        Cut right = cut_sum(point(group, cj), cut_twist(W, sigma.at(s)));
        require(cut_equal(left, right), "W c_s != c_s W^sigma(s) at grade " + to_string(s));
    }
    for (long i : {1L, -1L, 2L}) {
        for (long j : {1L, -2L, 2L}) {
            Rational r = h0 * Rational(i), s = h0 * Rational(j);
            Cut lhs = cut_sum(cut_sum(W, point(group, A.h_rule->c_value(sigma, i))),
                              cut_twist(cut_sum(W, point(group, A.h_rule->c_value(sigma, j))),
                                        sigma.at(r)));
            Cut rhs = cut_sum(W, point(group, A.h_rule->c_value(sigma, i + j)));
            require(cut_equal(lhs, rhs), "(W c_r)(W c_s)^sigma != W c_{r+s} at (" + to_string(r) +
                                             ", " + to_string(s) + ")");
        }
    }

    // Off-H cuts must be closure-stable W-modules that are not principal.
    for (const Rational& r : A.default_grid()) {
        if (r == Rational(0) || is_integer(r / h0)) continue;
        Cut Ar = A.at(r);
        Cut ol = o_left(Ar);
        require(cut_equal(ol, W), "O_l(A_s) != W at off-subgroup grade " + to_string(r));
        require(cut_equal(Ar, cut_closure(Ar, ol)),
                "A_s is not closure-stable at off-subgroup grade " + to_string(r));
        require(cut_equal(Ar, cut_sum(W, Ar)),
                "A_s != W A_s at off-subgroup grade " + to_string(r));
        require(!is_principal(Ar, W).principal,
                "A_s is a principal left W-ideal at off-subgroup grade " + to_string(r) +
                    " (grade belongs in H)");
    }

    GradedFamily M = A;
    M.h_rule->companion = true;

    AxiomReport repA = check_axioms(A, A.default_grid());
    require(repA.ok, "assembled family fails the extension axioms; " + repA.text());
    AxiomReport repM = check_axioms(M, M.default_grid());
    require(repM.ok, "companion family fails the extension axioms; " + repM.text());
    return {std::move(A), std::move(M)};
}

SupDiagnostics sup_diagnostics(const GradedFamily& F, const Rational& r, int n_sup) {
    require(F.closed_form.has_value(), "sup diagnostics need a closed-form family");
    require(r > Rational(0) && n_sup >= 1, "sup diagnostics need r > 0 and n_sup >= 1");
    const GradedMap& f = F.closed_form->f;
    Rational q(r.denominator());
    Int n1 = r.numerator();

    SupDiagnostics out;
    bool first = true;
    for (int n = 1; n <= n_sup; ++n) {
        Rational s = Rational(1) / (q * Rational(n));
        Int g = eval(f, r) - n1 * Int(n) * eval(f, s);
        Int h = eval(f, -r) - n1 * Int(n) * eval(f, -s);
        out.g_values.push_back(g);
        out.h_values.push_back(h);
        if (first || g > out.l_estimate) out.l_estimate = g;
        if (first || h > out.k_max) out.k_max = h;
        first = false;
    }
    int tail = std::max(1, n_sup / 4);
    out.l_stabilized = true;
    for (int n = n_sup - tail; n < n_sup; ++n)
        if (out.g_values[n] != out.g_values[n_sup - 1]) out.l_stabilized = false;
    // The linear lower bound certifies divergence only against a settled
    // finite l estimate.
    out.k_diverging = out.l_stabilized;
    for (int n = 1; n <= n_sup; ++n)
        if (out.h_values[n - 1] < Int(n) * n1 - out.l_estimate - 1) out.k_diverging = false;
    return out;
}

}  // namespace gve
