#include "gve/gen_poly.hpp"

#include <algorithm>

namespace gve {

GenPoly GenPoly::monomial(Rational coeff, ValueVector exponents) {
    GenPoly p;
    if (coeff != Rational(0)) p.terms.emplace_back(std::move(coeff), std::move(exponents));
    return p;
}

ValueVector mono_mul(const ValueVector& x, const ValueVector& y) {
    return x + vec_twist(y, GroupAutomorphism(x.z_part()));
}

GenPoly poly_add(const GenPoly& p, const GenPoly& q) {
    GenPoly out = p;
    for (const auto& [c, m] : q.terms) {
        auto it = std::find_if(out.terms.begin(), out.terms.end(),
                               [&](const auto& t) { return t.second == m; });
        if (it == out.terms.end()) {
            out.terms.emplace_back(c, m);
        } else {
            it->first += c;
            if (it->first == Rational(0)) out.terms.erase(it);
        }
    }
    return out;
}

GenPoly poly_mul(const GenPoly& p, const GenPoly& q) {
    GenPoly out;
    for (const auto& [cp, mp] : p.terms)
        for (const auto& [cq, mq] : q.terms)
            out = poly_add(out, GenPoly::monomial(cp * cq, mono_mul(mp, mq)));
    return out;
}

ValueVector valuation(const GenPoly& p) {
    if (p.is_zero()) throw ValidationError("valuation of the zero polynomial is undefined");
    const ValueVector* best = &p.terms.front().second;
    for (std::size_t i = 1; i < p.terms.size(); ++i)
        if (vec_less(p.terms[i].second, *best)) best = &p.terms[i].second;
    return *best;
}

ValueVector quotient_valuation(const GenPoly& p, const GenPoly& q) {
    if (q.is_zero()) throw ValidationError("quotient by the zero polynomial");
    return valuation(p) - valuation(q);
}

}  // namespace gve
