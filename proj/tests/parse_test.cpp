#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gve/parse.hpp"
#include "gve/report.hpp"
#include "testutil.hpp"

using namespace gve;

TEST_CASE("all stock examples round-trip through the text format") {
    for (const std::string& name : fixture_names()) {
        InstanceDoc doc = fixture_doc(name);
        std::string text = print_instance(doc);
        INFO(name, ":\n", text);
        InstanceDoc back = parse_instance(text);
        CHECK(print_instance(back) == text);
        // and the reparsed family classifies identically
        TypeVerdict v = classify_global(back.family, back.family.default_grid(), 16);
        CHECK(v.letter == *doc.expected);
    }
}

TEST_CASE("cut expressions parse to the right cuts") {
    InstanceDoc doc = parse_instance(
        "valuegroup rational-line\n"
        "sigma rate 0\n"
        "family A:\n"
        "  grade 0 -> cut(>= 0)\n"
        "  grade r -> cut(> -1*pi)\n");
    Cut c = doc.family.at(rat(1));
    CHECK(cut_equal(c, Cut::open_at(doc.group, ValueVector::single(Slot::y(rat(0)), pilinear_pi(rat(-1))))));
}

TEST_CASE("family must cover every grade") {
    CHECK_THROWS_AS(parse_instance("valuegroup rational-line\n"
                                   "family A:\n"
                                   "  grade r>0 -> cut(> -r*pi)\n"),
                    ParseError);
    try {
        parse_instance("valuegroup rational-line\nfamily A:\n  grade r>0 -> cut(> -r*pi)\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("does not cover") != std::string::npos);
    }
}

TEST_CASE("errors carry positions") {
    try {
        parse_instance("valuegroup rational-line\nsigma rate x\nfamily A:\n  grade r -> cut(>= 0)\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column >= 11);
    }
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("valuegroup moebius\n"), ParseError);
}

TEST_CASE("grade-0 component must be V") {
    CHECK_THROWS_AS(parse_instance("valuegroup rational-line\n"
                                   "family A:\n"
                                   "  grade 0 -> cut(> 5)\n"
                                   "  grade r -> cut(>= 0)\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("valuegroup rational-line\n"
                                   "ring V = cut(>= 1)\n"
                                   "family A:\n"
                                   "  grade r -> cut(>= 0)\n"),
                    ParseError);
}

TEST_CASE("tail sign must agree with the comparison") {
    CHECK_THROWS_AS(parse_instance("valuegroup lex\n"
                                   "family A:\n"
                                   "  grade r -> cut(>= 0, tail: +inf@0)\n"),
                    ParseError);
}

TEST_CASE("nonlinear grade expressions are rejected") {
    CHECK_THROWS_AS(parse_instance("valuegroup rational-line\n"
                                   "family A:\n"
                                   "  grade r -> cut(>= r*r)\n"),
                    ParseError);
}

TEST_CASE("undeclared ring names are rejected") {
    CHECK_THROWS_AS(parse_instance("valuegroup lex\n"
                                   "family A:\n"
                                   "  grade 0 -> cut(>= 0)\n"
                                   "  grade r -> W\n"),
                    ParseError);
}

TEST_CASE("ring references resolve") {
    InstanceDoc doc = parse_instance(
        "valuegroup lex\n"
        "ring W = cut(>= 0, tail: -inf@0+)\n"
        "sigma rate 0\n"
        "family A:\n"
        "  grade 0 -> cut(>= 0)\n"
        "  grade r>0 -> cut(> 0, tail: +inf@0+)\n"
        "  grade r<0 -> W\n");
    CHECK(cut_equal(doc.family.at(rat(-1)), Cut::ring(doc.group, Window::le_y(rat(0)))));
    TypeVerdict v = classify_global(doc.family, doc.family.default_grid(), 8);
    CHECK(v.letter == 'f');
}

TEST_CASE("subgroup declarations") {
    InstanceDoc doc = parse_instance(
        "valuegroup lex\n"
        "sigma rate 1\n"
        "subgroup H = 1 Z\n"
        "designate t = 1/2\n"
        "expected h @ 12\n"
        "family A:\n"
        "  grade 0 -> cut(>= 0)\n"
        "  grade r>0 -> cut(>= vec{z: -r, 0: -r*pi})\n"
        "  grade r<0 -> cut(> vec{z: -r, 0: -r*pi})\n");
    CHECK(doc.subgroup_h0 == rat(1));
    CHECK(doc.designated_t == rat(1, 2));
    CHECK(doc.expected == 'h');
    CHECK(doc.expected_bound == 12);
    CHECK(classify_global(doc.family, doc.family.default_grid(), 12).letter == 'h');

    InstanceDoc full = parse_instance(
        "valuegroup lex\n"
        "subgroup H = Q\n"
        "family A:\n"
        "  grade r -> cut(>= 0)\n");
    CHECK(full.subgroup_full);
}

TEST_CASE("closed-form families parse and classify") {
    InstanceDoc doc = parse_instance(
        "valuegroup rational-line discrete\n"
        "sigma rate 0\n"
        "bval -1\n"
        "family A:\n"
        "  grade r -> V * b^(fd(1))\n");
    REQUIRE(doc.family.closed_form.has_value());
    CHECK(doc.family.closed_form->f.family == MapFamily::Fd);
    CHECK(classify_global(doc.family, doc.family.default_grid(), 8).letter == 'e');
}

TEST_CASE("comments and whitespace are ignored") {
    InstanceDoc doc = parse_instance(
        "# instance\nvaluegroup rational-line  # dense\n\n"
        "family A:\n  grade r -> cut(>= 0)  # V everywhere\n");
    CHECK(cut_equal(doc.family.at(rat(5, 3)), v_ring(doc.group)));
}

TEST_CASE("element syntax parses to valued polynomials") {
    GenPoly p = parse_gen_poly("Y^(3) + Y^(1/2)");
    CHECK(valuation(p) == ValueVector::single(Slot::y(rat(0)), PiLinear(rat(1, 2))));
    GenPoly q = parse_gen_poly("Y[0]^(pi) * Y[1]^(-5)");
    ValueVector expect;
    expect.set(Slot::y(rat(0)), pilinear_pi());
    expect.set(Slot::y(rat(1)), PiLinear(rat(-5)));
    CHECK(valuation(q) == expect);
    GenPoly z = parse_gen_poly("1/2 * Z^(2) * Y[0]^(-pi)");
    ValueVector ze;
    ze.set(Slot::z(), PiLinear(rat(2)));
    ze.set(Slot::y(rat(0)), pilinear_pi(rat(-1)));
    CHECK(valuation(z) == ze);
    // round trip and cancellation
    CHECK(parse_gen_poly(to_string(q)).terms == q.terms);
    GenPoly sum = poly_add(parse_gen_poly("Y^(3)"), parse_gen_poly("-Y^(3)"));
    CHECK(sum.is_zero());
    CHECK_THROWS_AS(parse_gen_poly("Z^(pi)"), ParseError);
    CHECK_THROWS_AS(parse_gen_poly("Y^3"), ParseError);
}

TEST_CASE("element membership feeds the cut oracle") {
    Fixture fx = make_fixture("5.6");
    // v(Y[0]^(-pi) * Z^(-1)) lies exactly on the closed boundary of A_1
    GenPoly gen = parse_gen_poly("Y[0]^(-pi) * Z^(-1)");
    CHECK(cut_member(fx.family.at(rat(1)), valuation(gen)));
    CHECK(!cut_member(fx.family.at(rat(1, 2)), valuation(gen)));
    GenPoly above = parse_gen_poly("Y[0]^(-3) * Z^(-1)");
    CHECK(cut_member(fx.family.at(rat(1)), valuation(above)));
}

TEST_CASE("bare tail cut syntax") {
    InstanceDoc doc = parse_instance(
        "valuegroup lex\n"
        "ring W0 = cut(tail: -inf@0)\n"
        "sigma rate 1\n"
        "family A:\n"
        "  grade 0 -> cut(>= 0)\n"
        "  grade r>0 -> cut(>= vec{z: -2*r}, tail: -inf@0)\n"
        "  grade r<0 -> cut(> vec{z: -2*r}, tail: +inf@r)\n");
    CHECK(cut_equal(doc.rings.at("W0"), Cut::ring(doc.group, Window::lt_y(rat(0)))));
    CHECK(classify_global(doc.family, doc.family.default_grid(), 8).letter == 'b');
}
