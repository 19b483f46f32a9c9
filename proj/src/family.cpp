#include "gve/family.hpp"

#include <algorithm>
#include <set>

namespace gve {

Cut CutTemplate::instantiate(const ValueGroup& g, const Rational& r) const {
    Window w = Window::all();
    switch (win_kind) {
        case Window::All: break;
        case Window::LeZ: w = Window::le_z(); break;
        case Window::LtY: w = Window::lt_y(win_y.at(r)); break;
        case Window::LeY: w = Window::le_y(win_y.at(r)); break;
    }
    ValueVector boundary;
    for (const auto& [slot, lin] : head) boundary.set(slot, lin.at(r));
    return Cut::make(g, w, std::move(boundary), strict);
}

bool CutRulePiece::matches(const Rational& r, const std::optional<Rational>& h0) const {
    switch (cond) {
        case Zero: return r == Rational(0);
        case Pos: return r > Rational(0);
        case Neg: return r < Rational(0);
        case InH:
            if (!h0) throw ValidationError("grade pattern refers to H but no subgroup is declared");
            return r != Rational(0) && is_integer(r / *h0);
        case NotInH:
            if (!h0) throw ValidationError("grade pattern refers to H but no subgroup is declared");
            return !is_integer(r / *h0);
        case Any: return true;
    }
    return false;
}

const char* to_string(CutRulePiece::Cond c) {
    switch (c) {
        case CutRulePiece::Zero: return "0";
        case CutRulePiece::Pos: return "r>0";
        case CutRulePiece::Neg: return "r<0";
        case CutRulePiece::InH: return "r in H";
        case CutRulePiece::NotInH: return "r notin H";
        case CutRulePiece::Any: return "r";
    }
    return "?";
}

bool GradedFamily::in_h(const Rational& r) const {
    if (!subgroup_h0) throw ValidationError("no subgroup H declared");
    return is_integer(r / *subgroup_h0);
}

ValueVector HRuleData::c_value(const SigmaAction& sigma, long j) const {
    if (j == 0) return ValueVector{};
    bool neg = j < 0;
    long n = neg ? -j : j;
    ValueVector acc = c_base;
    for (long i = 1; i < n; ++i) {
        ValueVector step = vec_twist(c_base, sigma.at(h0 * Rational(i)));
        acc = acc + vec_twist(step, GroupAutomorphism(acc.z_part()));
    }
    if (!neg) return acc;
    // c_{-s} = (c_s^{-1})^{sigma(-s)}
    ValueVector inv = vec_twist(-acc, GroupAutomorphism(-acc.z_part()));
    return vec_twist(inv, sigma.at(-h0 * Rational(n)));
}

Cut GradedFamily::at(const Rational& r) const {
    if (r == Rational(0)) return v_ring(group);
    if (h_rule) {
        const HRuleData& hr = *h_rule;
        Rational ratio = r / hr.h0;
        if (is_integer(ratio)) {
            long j = static_cast<long>(ratio.numerator().convert_to<long long>());
            ValueVector c = hr.c_value(sigma, j);
            if (!hr.companion) {
                if (j > 0) return cut_sum(v_ring(group), Cut::closed_at(group, c));
                Cut pos = at(-r);
                return complement_reflect(pos, -r, sigma.rate);
            }
            if (j > 0) return cut_sum(radical(hr.W), Cut::closed_at(group, c));
            return cut_sum(hr.W, Cut::closed_at(group, c));
        }
        for (const CutRulePiece& p : hr.off_h)
            if (p.matches(r, subgroup_h0)) return p.tmpl.instantiate(group, r);
        throw ValidationError("off-subgroup rule does not cover grade " + to_string(r));
    }
    if (closed_form) {
        const ClosedFormData& cf = *closed_form;
        if (cf.exceptional) {
            auto it = cf.exceptional->rows.find(r);
            if (it != cf.exceptional->rows.end()) return it->second;
        }
        Int fr = eval(cf.f, r);
        ValueVector shift = cf.b_val.scaled(Rational(fr)) + cf.alpha_base.scaled(r);
        return cut_sum(cf.W, Cut::closed_at(group, shift));
    }
    if (!pieces.empty()) {
        for (const CutRulePiece& p : pieces)
            if (p.matches(r, subgroup_h0)) return p.tmpl.instantiate(group, r);
        throw ValidationError("family rule does not cover grade " + to_string(r));
    }
    if (table) {
        auto it = table->rows.find(r);
        if (it == table->rows.end())
            throw ValidationError("grade " + to_string(r) + " outside the family table");
        return it->second;
    }
    throw ValidationError("empty family");
}

std::vector<Rational> GradedFamily::default_grid(int max_num, int max_den) const {
    std::set<Rational> s;
    for (const Rational& r : farey_grid(max_num, max_den)) s.insert(r);
    auto add = [&](const Rational& r) {
        s.insert(r);
        s.insert(-r);
    };
    if (subgroup_h0) {
        add(*subgroup_h0);
        add(*subgroup_h0 * Rational(2));
        add(*subgroup_h0 / Rational(2));
    }
    if (designated_t) add(*designated_t);
    if (closed_form && closed_form->exceptional)
        for (const auto& [r, c] : closed_form->exceptional->rows) add(r);
    if (table)
        for (const auto& [r, c] : table->rows) add(r);
    return {s.begin(), s.end()};
}

AxiomReport check_axioms(const GradedFamily& F, const std::vector<Rational>& grid) {
    AxiomReport rep;
    std::set<Rational> in_grid(grid.begin(), grid.end());
    if (!in_grid.count(Rational(0))) throw ValidationError("axiom grid must contain 0");
    for (const Rational& g : grid)
        if (!in_grid.count(-g)) throw ValidationError("axiom grid not closed under negation");

    if (!cut_equal(F.at(Rational(0)), v_ring(F.group)))
        throw ValidationError("family does not have A_0 = V");
    if (F.group.is_line() && !(F.sigma.rate == Rational(0)))
        throw ValidationError("line value groups admit only the trivial action");

    std::map<Rational, Cut> cuts;
    for (const Rational& g : grid) {
        Cut c = F.at(g);
        if (c.whole) throw ValidationError("A_" + to_string(g) + " is the improper ideal");
        cuts.emplace(g, std::move(c));
    }

    for (const Rational& g : grid) {
        Cut refl = complement_reflect(cuts.at(g), g, F.sigma.rate);
        if (!cut_subset(refl, cuts.at(-g))) {
            rep.ok = false;
            rep.violation = {2, g, -g,
                             "complement of A_" + to_string(g) + " reflects to " + to_string(refl) +
                                 " which is not inside A_" + to_string(-g) + " = " +
                                 to_string(cuts.at(-g))};
            return rep;
        }
    }

    for (const Rational& g : grid) {
        for (const Rational& h : grid) {
            Rational sum = g + h;
            if (!in_grid.count(sum)) continue;
            Cut prod = cut_sum(cuts.at(g), cut_twist(cuts.at(h), F.sigma.at(g)));
            ++rep.pairs_checked;
            if (!cut_subset(prod, cuts.at(sum))) {
                rep.ok = false;
                rep.violation = {3, g, h,
                                 "A_" + to_string(g) + " * twist(A_" + to_string(h) + ") = " +
                                     to_string(prod) + " is not inside A_" + to_string(sum) +
                                     " = " + to_string(cuts.at(sum))};
                return rep;
            }
        }
    }
    return rep;
}

std::string AxiomReport::text() const {
    if (ok) return "axioms: pass (" + std::to_string(pairs_checked) + " product pairs)";
    std::string which = violation->axiom == 2 ? "pairing" : "product";
    return "axioms: FAIL (" + which + ") at (" + to_string(violation->g) + ", " +
           to_string(violation->h) + "): " + violation->detail;
}

}  // namespace gve
