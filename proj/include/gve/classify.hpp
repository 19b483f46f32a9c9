#pragma once

#include "gve/family.hpp"

namespace gve {

// Cuts A_{ir} of one cyclic slice H_r, i in [-window, window].
struct CyclicSlice {
    Rational r;
    int window = 1;
    std::map<int, Cut> cuts;
};

CyclicSlice slice_at(const GradedFamily& F, const Rational& r, int window);

// Classification outcome. Letters a,b,c,d,f,g pair with kind I; e,h with
// kind II; the constructor enforces the pairing.
struct TypeVerdict {
    enum Kind { TypeI, TypeII };
    Kind kind = TypeI;
    char letter = 'a';
    int bound = 0;
    std::vector<std::string> witnesses;
    std::string caveat;
    std::vector<std::string> warnings;

    static TypeVerdict make(char letter, int bound);
};

const char* to_string(TypeVerdict::Kind k);

// M_0 = V, M_{ir} the iterated twisted product of A_r, M_{-ir} the twisted
// residual (V : M_{ir}); indices -N..N.
std::map<int, Cut> m_family(const GradedFamily& F, const Rational& r, int N);

// Letter of the cyclic extension generated by the slice, by the boundary
// shape of A_r: closure growth -> f; principal generator -> a/b/c/d/e by
// order comparisons; otherwise a principality scan over M up to `bound`
// separates h from the bound-stamped g.
TypeVerdict classify_cyclic(const GradedFamily& F, const CyclicSlice& S, int bound);

// Whole-family classification over the grid. Exactness of every in-grid
// product pair decides kind I vs II; letters come from slice agreement
// (kind I) or from the shape of J(W) (kind II).
TypeVerdict classify_global(const GradedFamily& F, const std::vector<Rational>& grid, int bound);

inline TypeVerdict classify_global(const GradedFamily& F, int bound = 16) {
    return classify_global(F, F.default_grid(), bound);
}

}  // namespace gve
