#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gve/gen_poly.hpp"
#include "gve/value_group.hpp"
#include "testutil.hpp"

using namespace gve;

namespace {

ValueVector y0(PiLinear v) { return ValueVector::single(Slot::y(rat(0)), std::move(v)); }

ValueVector vec(std::initializer_list<std::pair<Rational, PiLinear>> ys) {
    ValueVector v;
    for (const auto& [pos, val] : ys) v.set(Slot::y(pos), val);
    return v;
}

}  // namespace

TEST_CASE("vec_cmp pinned values") {
    CHECK(vec_cmp(ValueVector{}, ValueVector{}) == Ordering::Equal);
    CHECK(vec_cmp(vec({{rat(0), PiLinear(rat(1))}}), vec({{rat(1), PiLinear(rat(100))}})) ==
          Ordering::Greater);
    CHECK(vec_cmp(vec({{rat(0), pilinear_pi()}}), vec({{rat(0), PiLinear(rat(3))}})) ==
          Ordering::Greater);
}

TEST_CASE("vec_twist pinned values") {
    GroupAutomorphism shift1(rat(1));
    CHECK(vec_twist(ValueVector{}, shift1) == ValueVector{});
    CHECK(vec_twist(vec({{rat(1), PiLinear(rat(2))}}), shift1) == vec({{rat(0), PiLinear(rat(2))}}));
    CHECK(vec_twist(vec({{rat(0), pilinear_pi()}, {rat(2), PiLinear(rat(-1))}}),
                    GroupAutomorphism(rat(-1))) ==
          vec({{rat(1), pilinear_pi()}, {rat(3), PiLinear(rat(-1))}}));
}

TEST_CASE("valuation pinned values") {
    ValueGroup line = ValueGroup::rational_line();
    GenPoly constant = GenPoly::monomial(rat(1), ValueVector{});
    CHECK(valuation(constant) == ValueVector{});

    GenPoly p = poly_add(GenPoly::monomial(rat(1), y0(PiLinear(rat(3)))),
                         GenPoly::monomial(rat(1), y0(PiLinear(rat(1, 2)))));
    CHECK(valuation(p) == y0(PiLinear(rat(1, 2))));

    GenPoly q = poly_add(GenPoly::monomial(rat(1), vec({{rat(0), pilinear_pi()}})),
                         GenPoly::monomial(rat(1), vec({{rat(1), PiLinear(rat(-5))}})));
    CHECK(valuation(q) == vec({{rat(1), PiLinear(rat(-5))}}));

    CHECK_THROWS_AS(valuation(GenPoly::zero()), ValidationError);
}

TEST_CASE("quotient_valuation pinned values") {
    GenPoly p = GenPoly::monomial(rat(1), y0(PiLinear(rat(2))));
    CHECK(quotient_valuation(p, p) == ValueVector{});
    GenPoly q = GenPoly::monomial(rat(1), y0(PiLinear(rat(1, 2))));
    CHECK(quotient_valuation(p, q) == y0(PiLinear(rat(3, 2))));
    GenPoly one = GenPoly::monomial(rat(1), ValueVector{});
    GenPoly ypi = GenPoly::monomial(rat(1), y0(pilinear_pi()));
    CHECK(quotient_valuation(one, ypi) == y0(pilinear_pi(rat(-1))));
    CHECK_THROWS_AS(quotient_valuation(p, GenPoly::zero()), ValidationError);
}

TEST_CASE("order and twist properties") {
    testutil::Rng rng;
    ValueGroup g = ValueGroup::lex();
    for (int i = 0; i < 300; ++i) {
        ValueVector a = rng.vector(g), b = rng.vector(g), c = rng.vector(g);
        Ordering ab = vec_cmp(a, b);
        CHECK(vec_cmp(a + c, b + c) == ab);
        GroupAutomorphism tau(rng.rational(4, 3));
        CHECK(vec_cmp(vec_twist(a, tau), vec_twist(b, tau)) == ab);
        GroupAutomorphism s(rng.rational(4, 3)), t(rng.rational(4, 3));
        CHECK(vec_twist(vec_twist(a, s), t) == vec_twist(a, s.then(t)));
    }
}

TEST_CASE("valuation is multiplicative and minimal") {
    testutil::Rng rng;
    ValueGroup g = ValueGroup::lex();
    for (int i = 0; i < 200; ++i) {
        GenPoly p = GenPoly::monomial(rat(rng.pick(1, 5)), rng.vector(g));
        GenPoly q = GenPoly::monomial(rat(rng.pick(1, 5)), rng.vector(g));
        // monomials: valuation of the product is the twisted sum
        CHECK(valuation(poly_mul(p, q)) ==
              mono_mul(valuation(p), valuation(q)));
        GenPoly sum = poly_add(p, q);
        if (!sum.is_zero()) {
            ValueVector vmin = vec_less(valuation(p), valuation(q)) ? valuation(p) : valuation(q);
            CHECK(!vec_less(valuation(sum), vmin));
            if (vec_cmp(valuation(p), valuation(q)) != Ordering::Equal)
                CHECK(valuation(sum) == vmin);
        }
    }
}
