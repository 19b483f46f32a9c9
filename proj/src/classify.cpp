#include "gve/classify.hpp"

#include <algorithm>
#include <set>

namespace gve {

namespace {

// v((a^{-1})^{sigma(-g)}) for v(a) = val: inversion conjugates by the Z part.
ValueVector inverse_value(const ValueVector& val) {
    return vec_twist(-val, GroupAutomorphism(-val.z_part()));
}

Cut point_cut(const ValueGroup& g, const ValueVector& v) { return Cut::closed_at(g, v); }

}  // namespace

CyclicSlice slice_at(const GradedFamily& F, const Rational& r, int window) {
    if (r <= Rational(0)) throw ValidationError("cyclic slices need r > 0");
    CyclicSlice s{r, window, {}};
    for (int i = -window; i <= window; ++i) s.cuts.emplace(i, F.at(r * Rational(i)));
    return s;
}

const char* to_string(TypeVerdict::Kind k) { return k == TypeVerdict::TypeI ? "I" : "II"; }

TypeVerdict TypeVerdict::make(char letter, int bound) {
    TypeVerdict v;
    v.letter = letter;
    v.bound = bound;
    switch (letter) {
        case 'a':
        case 'b':
        case 'c':
        case 'd':
        case 'f':
        case 'g': v.kind = TypeI; break;
        case 'e':
        case 'h': v.kind = TypeII; break;
        default: throw ValidationError(std::string("unknown type letter '") + letter + "'");
    }
    return v;
}

std::map<int, Cut> m_family(const GradedFamily& F, const Rational& r, int N) {
    if (r <= Rational(0)) throw ValidationError("m_family needs r > 0");
    std::map<int, Cut> out;
    Cut V = v_ring(F.group);
    out.emplace(0, V);
    Cut Ar = F.at(r);
    Cut acc = Ar;
    out.emplace(1, acc);
    for (int i = 2; i <= N; ++i) {
        acc = cut_sum(acc, cut_twist(Ar, F.sigma.at(r * Rational(i - 1))));
        out.emplace(i, acc);
    }
    for (int i = 1; i <= N; ++i) {
        Cut res = residual_left(V, out.at(i));
        out.emplace(-i, cut_twist(res, F.sigma.at(-r * Rational(i))));
    }
    return out;
}

TypeVerdict classify_cyclic(const GradedFamily& F, const CyclicSlice& S, int bound) {
    if (S.window < 1) throw ValidationError("slice window too small; need at least [-1, 1]");
    const Cut& Ar = S.cuts.at(1);
    const Cut& Aneg = S.cuts.at(-1);
    const Cut V = v_ring(F.group);
    Cut W = o_left(Ar);
    GroupAutomorphism sig_r = F.sigma.at(S.r);
    GroupAutomorphism sig_neg = F.sigma.at(-S.r);

    Cut closure = cut_closure(Ar, W);
    if (!cut_equal(closure, Ar)) {
        TypeVerdict v = TypeVerdict::make('f', bound);
        v.witnesses.push_back("closure " + to_string(closure) + " strictly contains A_r = " +
                              to_string(Ar));
        return v;
    }

    PrincipalityResult pr = is_principal(Ar, W);
    if (pr.principal) {
        const ValueVector& a = *pr.witness;
        Cut aWsig = cut_sum(point_cut(F.group, a), cut_twist(W, sig_r));
        ValueVector inv_tw = vec_twist(inverse_value(a), sig_neg);
        Cut v_form = cut_sum(V, point_cut(F.group, inv_tw));
        Cut j_form = cut_sum(radical(W), point_cut(F.group, inv_tw));

        bool wa_eq = cut_equal(Ar, aWsig);
        if (cut_equal(W, V) && wa_eq && cut_equal(Aneg, v_form)) {
            return TypeVerdict::make('a', bound);
        }
        if (!wa_eq) {
            bool b_case = cut_subset(aWsig, Ar);
            bool c_case = cut_subset(Ar, aWsig);
            if (b_case && !c_case) {
                TypeVerdict v = TypeVerdict::make('b', bound);
                v.witnesses.push_back("Wa = " + to_string(Ar) + " strictly contains aW^sigma = " +
                                      to_string(aWsig));
                return v;
            }
            if (c_case && !b_case) {
                TypeVerdict v = TypeVerdict::make('c', bound);
                v.witnesses.push_back("Wa = " + to_string(Ar) + " is strictly inside aW^sigma = " +
                                      to_string(aWsig));
                return v;
            }
            throw ValidationError("order comparison of Wa and aW^sigma is inconclusive at r = " +
                                  to_string(S.r));
        }
        if (cut_equal(Aneg, j_form)) {
            Cut JW = radical(W);
            if (is_idempotent(JW) && !is_principal(JW, W).principal) {
                TypeVerdict v = TypeVerdict::make('d', bound);
                v.witnesses.push_back("A_{-r} = J(W)(a^{-1})^sigma and J(W)^2 = J(W)");
                return v;
            }
            if (is_principal(JW, W).principal) {
                TypeVerdict v = TypeVerdict::make('e', bound);
                v.witnesses.push_back("A_{-r} = J(W)(a^{-1})^sigma and J(W) is principal");
                return v;
            }
        }
        throw ValidationError("principal slice at r = " + to_string(S.r) +
                              " matches no cyclic type; A_{-r} = " + to_string(Aneg));
    }

    // Closure-stable, not principal: separate h from g by scanning the
    // closures of the M products for a principal left W-ideal.
    std::map<int, Cut> M = m_family(F, S.r, bound);
    for (int i = 1; i <= bound; ++i) {
        const Cut& Mi = M.at(i);
        Cut cl = cut_closure(Mi, o_left(Mi));
        if (cut_equal(o_left(cl), W) && is_principal(cl, W).principal) {
            TypeVerdict v = TypeVerdict::make('h', bound);
            v.witnesses.push_back("closure of M_" + std::to_string(i) + "r = " + to_string(cl) +
                                  " is a principal left W-ideal");
            return v;
        }
    }
    TypeVerdict v = TypeVerdict::make('g', bound);
    v.caveat = "letter g is certified only up to bound " + std::to_string(bound);
    v.witnesses.push_back("no closure of M_ir is principal over W for i <= " +
                          std::to_string(bound));
    return v;
}

TypeVerdict classify_global(const GradedFamily& F, const std::vector<Rational>& grid, int bound) {
    AxiomReport rep = check_axioms(F, grid);
    if (!rep.ok) throw ValidationError("family fails the extension axioms; " + rep.text());

    std::set<Rational> in_grid(grid.begin(), grid.end());
    std::vector<Rational> positives;
    for (const Rational& g : grid)
        if (g > Rational(0)) positives.push_back(g);
    std::sort(positives.begin(), positives.end());

    std::vector<std::string> witnesses;
    for (const Rational& g : positives) {
        for (const Rational& h : positives) {
            if (!in_grid.count(g + h)) continue;
            Cut prod = cut_sum(F.at(g), cut_twist(F.at(h), F.sigma.at(g)));
            if (!cut_equal(prod, F.at(g + h))) {
                witnesses.push_back("A_" + to_string(g) + " A_" + to_string(h) +
                                    "^sigma = " + to_string(prod) + " is strictly inside A_" +
                                    to_string(g + h) + " = " + to_string(F.at(g + h)));
            }
            Cut nprod = cut_sum(F.at(-g), cut_twist(F.at(-h), F.sigma.at(-g)));
            if (!cut_equal(nprod, F.at(-g - h))) {
                witnesses.push_back("A_" + to_string(-g) + " A_" + to_string(-h) +
                                    "^sigma = " + to_string(nprod) + " is strictly inside A_" +
                                    to_string(-g - h) + " = " + to_string(F.at(-g - h)));
            }
            if (witnesses.size() >= 4) break;
        }
        if (witnesses.size() >= 4) break;
    }

    if (witnesses.empty()) {
        // Kind I: every slice must agree on the letter.
        std::vector<Rational> sample;
        for (const Rational& g : positives) {
            sample.push_back(g);
            if (sample.size() == 4) break;
        }
        if (std::find(positives.begin(), positives.end(), Rational(1)) != positives.end() &&
            std::find(sample.begin(), sample.end(), Rational(1)) == sample.end())
            sample.push_back(Rational(1));
        if (sample.empty()) throw ValidationError("grid has no positive grades");
        std::optional<TypeVerdict> verdict;
        for (const Rational& r : sample) {
            TypeVerdict v = classify_cyclic(F, slice_at(F, r, 2), bound);
            if (!verdict) {
                verdict = v;
            } else if (verdict->letter != v.letter) {
                throw ValidationError(std::string("slice disagreement: r = ") + to_string(sample[0]) +
                                      " gives type (" + verdict->letter + ") but r = " + to_string(r) +
                                      " gives type (" + v.letter + "); grid too coarse or malformed instance");
            }
        }
        return *verdict;
    }

    // Kind II: the letter comes from the shape of J(W).
    Cut W = [&]() -> Cut {
        if (F.designated_t) return o_left(F.at(*F.designated_t));
        Window w = Window::all();
        for (const Rational& g : grid) {
            if (g == Rational(0)) continue;
            w = window_intersect(w, o_left(F.at(g)).win);
        }
        // A grade-dependent window cutoff in a rule family runs off to the
        // Z-only ring in the limit.
        for (const CutRulePiece& p : F.pieces) {
            if (p.tmpl.win_kind != Window::LtY && p.tmpl.win_kind != Window::LeY) continue;
            if (p.tmpl.win_y.c1 == Rational(0)) continue;
            bool diverges_down = (p.cond == CutRulePiece::Neg && p.tmpl.win_y.c1 > Rational(0)) ||
                                 (p.cond == CutRulePiece::Pos && p.tmpl.win_y.c1 < Rational(0)) ||
                                 p.cond == CutRulePiece::Any;
            if (diverges_down) w = window_intersect(w, Window::le_z());
        }
        return Cut::ring(F.group, w);
    }();

    Cut JW = radical(W);
    TypeVerdict v = is_principal(JW, W).principal ? TypeVerdict::make('e', bound)
                                                  : TypeVerdict::make('h', bound);
    if (!is_principal(JW, W).principal && !is_idempotent(JW))
        throw ValidationError("J(W) is neither principal nor idempotent");
    v.witnesses = std::move(witnesses);
    if (!F.designated_t)
        v.warnings.push_back(
            "no grade t with O_l(A_t) = W is designated; W was taken as the union over the grid");
    return v;
}

}  // namespace gve
