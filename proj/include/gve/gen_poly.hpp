#pragma once

#include "gve/value_group.hpp"

namespace gve {

// Generalized polynomial over Q: finitely many terms, each a nonzero
// rational coefficient on a monomial identified by its exponent vector.
// Only what the valuation oracles need: monomial products and term merging.
struct GenPoly {
    std::vector<std::pair<Rational, ValueVector>> terms;

    static GenPoly zero() { return {}; }
    static GenPoly monomial(Rational coeff, ValueVector exponents);
    bool is_zero() const { return terms.empty(); }
};

// Product of two monomial exponent vectors. A Z exponent on the left
// conjugates the right factor's Y indices (moving Z^p past Y_i twists the
// index by p).
ValueVector mono_mul(const ValueVector& x, const ValueVector& y);

GenPoly poly_add(const GenPoly& p, const GenPoly& q);
GenPoly poly_mul(const GenPoly& p, const GenPoly& q);

// Minimum exponent vector of the nonzero terms. Throws on the zero
// polynomial, whose valuation is undefined.
ValueVector valuation(const GenPoly& p);

// valuation(p) - valuation(q) in the group; q must be nonzero.
ValueVector quotient_valuation(const GenPoly& p, const GenPoly& q);

}  // namespace gve
