#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gve/fixtures.hpp"
#include "gve/report.hpp"
#include "testutil.hpp"

using namespace gve;

TEST_CASE("all nine examples classify to their stated types") {
    auto rows = run_all(16);
    REQUIRE(rows.size() == 9);
    for (const FixtureRow& r : rows) {
        INFO(r.name, ": ", r.note);
        CHECK(r.pass);
    }
}

TEST_CASE("a small scan bound still certifies, stamped") {
    auto rows = run_all(2);
    for (const FixtureRow& r : rows) {
        CHECK(r.pass);
        if (r.name == "5.2") {
            CHECK(r.got == 'g');
            CHECK(r.bound == 2);
        }
    }
}

TEST_CASE("corrupting a fixture fails its row") {
    // Swap the window offsets of the two sides of 5.5: the order comparison
    // between Wa and aW^sigma flips and the product axiom breaks.
    Fixture fx = make_fixture("5.5");
    GradedFamily bad = fx.family;
    for (CutRulePiece& p : bad.pieces) {
        if (p.cond == CutRulePiece::Pos) p.tmpl.win_y = {rat(0), rat(2)};
    }
    bool failed = false;
    std::string note;
    try {
        TypeVerdict v = classify_global(bad, bad.default_grid(), 8);
        failed = v.letter != fx.expected;
        if (failed && !v.witnesses.empty()) note = v.witnesses.front();
    } catch (const Error& e) {
        failed = true;
        note = e.what();
    }
    CHECK(failed);
    CHECK(!note.empty());
}

TEST_CASE("stated side conditions hold as cut facts") {
    // W_0 Z^{-2r} strictly contains W_r Z^{-2r}
    Fixture f54 = make_fixture("5.4");
    const ValueGroup& g4 = f54.family.group;
    for (const Rational& r : {rat(1), rat(1, 2), rat(3)}) {
        Cut Ar = f54.family.at(r);
        ValueVector a = *is_principal(Ar, o_left(Ar)).witness;
        Cut aWs = cut_sum(Cut::closed_at(g4, a), cut_twist(o_left(Ar), f54.family.sigma.at(r)));
        CHECK(cut_subset(aWs, Ar));
        CHECK(!cut_equal(aWs, Ar));
    }
    // W_{-2r} Z^r strictly inside W_{-4r} Z^r
    Fixture f55 = make_fixture("5.5");
    const ValueGroup& g5 = f55.family.group;
    for (const Rational& r : {rat(1), rat(2)}) {
        Cut Ar = f55.family.at(r);
        ValueVector a = *is_principal(Ar, o_left(Ar)).witness;
        Cut aWs = cut_sum(Cut::closed_at(g5, a), cut_twist(o_left(Ar), f55.family.sigma.at(r)));
        CHECK(cut_subset(Ar, aWs));
        CHECK(!cut_equal(Ar, aWs));
    }
    // 5.6: closure-stability and non-principality off the subgroup, the
    // idempotent radical of W, and non-finite generation of A_r.
    Fixture f56 = make_fixture("5.6");
    Cut W = o_left(f56.family.at(rat(1, 2)));
    CHECK(W.win == Window::le_y(rat(0)));
    Cut JW = radical(W);
    CHECK(is_idempotent(JW));
    CHECK(!is_principal(JW, W).principal);
    for (const Rational& r : {rat(1, 2), rat(1, 3), rat(5, 2)}) {
        Cut Ar = f56.family.at(r);
        CHECK(cut_equal(cut_closure(Ar, W), Ar));
        CHECK(!is_principal(Ar, W).principal);
        CHECK(cut_equal(cut_sum(W, Ar), Ar));
    }
    // on the subgroup the components are principal over V
    for (const Rational& r : {rat(1), rat(2)}) {
        Cut Ar = f56.family.at(r);
        CHECK(cut_equal(o_left(Ar), v_ring(f56.family.group)));
        CHECK(is_principal(Ar, o_left(Ar)).principal);
    }
}

TEST_CASE("orders stay strictly below W for the windowed translate examples") {
    for (const char* name : {"5.4", "5.5"}) {
        Fixture fx = make_fixture(name);
        // The union of the orders over all grades is the Z-part ring.
        Cut Wlimit = Cut::ring(fx.family.group, Window::le_z());
        for (const Rational& r : fx.family.default_grid()) {
            if (r == Rational(0)) continue;
            Cut ol = o_left(fx.family.at(r));
            CHECK(cut_subset(ol, Wlimit));
            CHECK(!cut_equal(ol, Wlimit));
        }
    }
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(make_fixture("5.7"), ValidationError);
}
