#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gve/build.hpp"
#include "gve/fixtures.hpp"
#include "testutil.hpp"

using namespace gve;

namespace {

ValueVector y0(PiLinear v) { return ValueVector::single(Slot::y(rat(0)), std::move(v)); }

// Rank-2 group with an integer lattice at Y0, so the window ring at Y0 has
// a principal radical.
ValueGroup rank2_group() {
    ValueGroup g = ValueGroup::lex();
    g.y_overrides[rat(0)] = SlotLattice::Integers;
    return g;
}

Cut rank2_W(const ValueGroup& g) { return Cut::ring(g, Window::le_y(rat(0))); }

// Exceptional rows B_{jk} = V b^{f(jk)} for every in-grid multiple of k.
TableRows exceptional_rows(const ValueGroup& g, const GradedMap& f, const Rational& k,
                           const ValueVector& b_val) {
    TableRows rows;
    for (int j = 1; k * Rational(j) <= Rational(6); ++j) {
        for (int sgn : {1, -1}) {
            Rational r = k * Rational(j * sgn);
            ValueVector shift = b_val.scaled(Rational(eval(f, r)));
            rows.rows.emplace(r, cut_translate(v_ring(g), shift));
        }
    }
    return rows;
}

struct TypeHSetup {
    ValueGroup group;
    SigmaAction sigma;
    Cut W;
    TypeHData data;
};

// Subgroup-pinned instance shaped like the stock example 5.6, with
// adjustable subgroup step and Z slope.
TypeHSetup make_type_h(Rational h0, Rational zc, Rational y_slope = rat(1)) {
    TypeHSetup s;
    s.group = ValueGroup::lex(h0);
    s.sigma.rate = zc;
    s.W = Cut::ring(s.group, Window::le_y(rat(0)));
    s.data.h0 = h0;
    ValueVector c;
    c.set(Slot::z(), PiLinear(-zc * h0));
    c.set(Slot::y(rat(0)), pilinear_pi(-h0 * y_slope));
    s.data.c_base = c;
    std::vector<std::pair<Slot, LinearPi>> head = {
        {Slot::z(), LinearPi{PiLinear(), PiLinear(-zc)}},
        {Slot::y(rat(0)), LinearPi{PiLinear(), pilinear_pi(-y_slope)}},
    };
    CutTemplate pos{Window::All, {}, head, false};
    CutTemplate neg{Window::All, {}, head, true};
    s.data.off_h = {CutRulePiece{CutRulePiece::Pos, pos}, CutRulePiece{CutRulePiece::Neg, neg}};
    s.data.designated_t = h0 / rat(2);
    return s;
}

}  // namespace

TEST_CASE("closed-form build reproduces the floor-translate example") {
    ValueGroup g = ValueGroup::rational_line(true);
    GradedFamily F = build_type_e(g, SigmaAction{}, v_ring(g), y0(PiLinear(rat(-1))),
                                  GradedMap{MapFamily::Fd, PiLinear(rat(1))}, ValueVector{});
    Fixture fx = make_fixture("5.1.3");
    for (const Rational& r : F.default_grid())
        CHECK(cut_equal(F.at(r), fx.family.at(r)));
    CHECK(classify_global(F, 12).letter == 'e');
}

TEST_CASE("closed-form build with the reflected family at d = 0") {
    ValueGroup g = ValueGroup::rational_line(true);
    GradedFamily F = build_type_e(g, SigmaAction{}, v_ring(g), y0(PiLinear(rat(-1))),
                                  GradedMap{MapFamily::FdM1, PiLinear(rat(0))}, ValueVector{});
    CHECK(cut_equal(F.at(rat(3, 2)), v_ring(g)));
    CHECK(cut_equal(F.at(rat(-3, 2)), Cut::closed_at(g, y0(PiLinear(rat(1))))));
    CHECK(classify_global(F, 12).letter == 'e');
}

TEST_CASE("closed-form rejections") {
    ValueGroup g = ValueGroup::rational_line(true);
    Cut V = v_ring(g);
    ValueVector b = y0(PiLinear(rat(-1)));
    // zero map
    CHECK_THROWS_AS(build_type_e(g, SigmaAction{}, V, b, GradedMap{MapFamily::Fd, PiLinear(rat(0))},
                                 ValueVector{}),
                    ValidationError);
    // wrong generator value
    CHECK_THROWS_AS(build_type_e(g, SigmaAction{}, V, y0(PiLinear(rat(-2))),
                                 GradedMap{MapFamily::Fd, PiLinear(rat(1))}, ValueVector{}),
                    ValidationError);
    // corrupted map table
    GradedMapTable t;
    for (const Rational& r : farey_grid(4, 4)) t.entries[r] = eval(GradedMap{MapFamily::Fd, PiLinear(rat(1, 2))}, r);
    t.entries[rat(2)] -= 1;
    CHECK_THROWS_AS(build_type_e_from_table(g, SigmaAction{}, V, b, t, ValueVector{}),
                    ValidationError);
}

TEST_CASE("table-driven closed form accepts an intact map") {
    ValueGroup g = ValueGroup::rational_line(true);
    GradedMapTable t;
    for (const Rational& r : farey_grid(4, 4))
        t.entries[r] = eval(GradedMap{MapFamily::FdM1, PiLinear(rat(1, 2))}, r);
    GradedFamily F = build_type_e_from_table(g, SigmaAction{}, v_ring(g), y0(PiLinear(rat(-1))), t,
                                             ValueVector{});
    CHECK(F.table.has_value());
}

TEST_CASE("closed-form build over a proper overring needs the exceptional rows") {
    ValueGroup g = rank2_group();
    Cut W = rank2_W(g);
    ValueVector b = y0(PiLinear(rat(-1)));
    GradedMap f{MapFamily::Fd, PiLinear(rat(2))};  // zero-sum period 1/2
    CHECK_THROWS_AS(build_type_e(g, SigmaAction{}, W, b, f, ValueVector{}), ValidationError);

    TableRows rows = exceptional_rows(g, f, rat(1, 2), b);
    GradedFamily F = build_type_e(g, SigmaAction{}, W, b, f, ValueVector{}, rows);
    CHECK(classify_global(F, 12).letter == 'e');

    // sandwich violated: replace one row by the upper bound W b^{f(jk)}
    TableRows bad = rows;
    bad.rows.at(rat(1, 2)) =
        cut_sum(W, Cut::closed_at(g, b.scaled(Rational(eval(f, rat(1, 2))))));
    CHECK_THROWS_AS(build_type_e(g, SigmaAction{}, W, b, f, ValueVector{}, bad), ValidationError);
}

TEST_CASE("closed-form build with a Z-slope alpha") {
    ValueGroup g = rank2_group();
    Cut W = rank2_W(g);
    SigmaAction sigma{rat(1)};
    ValueVector alpha;
    alpha.set(Slot::z(), PiLinear(rat(-1)));  // rate 1 pairs with slope -1
    GradedFamily F = build_type_e(g, sigma, W, y0(PiLinear(rat(-1))),
                                  GradedMap{MapFamily::Fd1, pilinear_pi(rat(1))}, alpha);
    CHECK(classify_global(F, 12).letter == 'e');
    // mismatched slope is not a grade homomorphism for this action
    ValueVector wrong;
    wrong.set(Slot::z(), PiLinear(rat(1)));
    CHECK_THROWS_AS(build_type_e(g, sigma, W, y0(PiLinear(rat(-1))),
                                 GradedMap{MapFamily::Fd1, pilinear_pi(rat(1))}, wrong),
                    ValidationError);
}

TEST_CASE("subgroup-pinned build matches the stock example") {
    TypeHSetup s = make_type_h(rat(1), rat(1));
    TypeHResult r = build_type_h(s.group, s.sigma, s.W, s.data);
    Fixture fx = make_fixture("5.6");
    for (const Rational& g : fx.family.default_grid())
        CHECK(cut_equal(r.A.at(g), fx.family.at(g)));
    CHECK(classify_global(r.A, 12).letter == 'h');
    CHECK(classify_global(r.M, 12).letter == 'h');
    AxiomReport rep = check_axioms(r.M, r.M.default_grid());
    CHECK(rep.ok);
}

TEST_CASE("subgroup-pinned build across steps and slopes") {
    for (const auto& [h0, zc] : std::vector<std::pair<Rational, Rational>>{
             {rat(1, 2), rat(1)}, {rat(2), rat(1)}, {rat(1), rat(2)}, {rat(1), rat(1, 2)}}) {
        TypeHSetup s = make_type_h(h0, zc);
        TypeHResult r = build_type_h(s.group, s.sigma, s.W, s.data);
        INFO("h0 = ", to_string(h0), ", zc = ", to_string(zc));
        CHECK(classify_global(r.A, 12).letter == 'h');
        CHECK(check_axioms(r.M, r.M.default_grid()).ok);
    }
}

TEST_CASE("subgroup-pinned rejections") {
    TypeHSetup s = make_type_h(rat(1), rat(1));
    // H = Q
    TypeHData full = s.data;
    full.h0.reset();
    CHECK_THROWS_AS(build_type_h(s.group, s.sigma, s.W, full), ValidationError);
    // H = {0}
    TypeHData zero = s.data;
    zero.h0 = rat(0);
    CHECK_THROWS_AS(build_type_h(s.group, s.sigma, s.W, zero), ValidationError);
    // principal radical: integer lattice at the window edge
    ValueGroup gz = ValueGroup::lex(rat(1));
    gz.y_overrides[rat(0)] = SlotLattice::Integers;
    CHECK_THROWS_AS(build_type_h(gz, s.sigma, Cut::ring(gz, Window::le_y(rat(0))), s.data),
                    ValidationError);
    // off-subgroup component turns principal: doubled exponent slope makes
    // the boundary attained at half-integers
    TypeHSetup bad = make_type_h(rat(1), rat(1), rat(2));
    CHECK_THROWS_AS(build_type_h(bad.group, bad.sigma, bad.W, bad.data), ValidationError);
}

TEST_CASE("sup diagnostics pinned values") {
    ValueGroup g = ValueGroup::rational_line(true);
    GradedFamily F = build_type_e(g, SigmaAction{}, v_ring(g), y0(PiLinear(rat(-1))),
                                  GradedMap{MapFamily::Fd, PiLinear(rat(1))}, ValueVector{});
    SupDiagnostics d = sup_diagnostics(F, rat(1), 50);
    CHECK(d.l_estimate == 1);
    CHECK(d.l_stabilized);
    CHECK(d.k_diverging);
    CHECK(d.k_max > 40);

    GradedFamily F1 = build_type_e(g, SigmaAction{}, v_ring(g), y0(PiLinear(rat(-1))),
                                   GradedMap{MapFamily::Fd1, PiLinear(rat(0))}, ValueVector{});
    SupDiagnostics d1 = sup_diagnostics(F1, rat(1), 50);
    CHECK(!d1.l_stabilized);   // the primal side runs away
    CHECK(d1.k_max == 0);      // the dual side is flat
    CHECK(!d1.k_diverging);

    CHECK_THROWS_AS(sup_diagnostics(make_fixture("5.2").family, rat(1), 10), ValidationError);
}
