#include "gve/fixtures.hpp"

namespace gve {

namespace {

LinearPi lin(PiLinear c0, PiLinear c1) { return {std::move(c0), std::move(c1)}; }
PiLinear none() { return PiLinear(); }

CutRulePiece piece(CutRulePiece::Cond cond, CutTemplate tmpl) { return {cond, std::move(tmpl)}; }

CutTemplate at_zero() { return CutTemplate{Window::All, {}, {}, false}; }

// head entries keyed (slot, c0 + c1*r)
CutTemplate tmpl(std::vector<std::pair<Slot, LinearPi>> head, bool strict,
                 Window::Kind wk = Window::All, LinearRat wy = {}) {
    CutTemplate t;
    t.win_kind = wk;
    t.win_y = wy;
    t.head = std::move(head);
    t.strict = strict;
    return t;
}

GradedFamily fixture_5_1_1() {
    GradedFamily F;
    F.group = ValueGroup::rational_line();
    F.pieces = {piece(CutRulePiece::Any, at_zero())};
    return F;
}

GradedFamily fixture_5_1_2() {
    GradedFamily F;
    F.group = ValueGroup::lex();
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Pos, tmpl({}, true, Window::LeY, {rat(0), rat(0)})),
        piece(CutRulePiece::Neg, tmpl({}, false, Window::LeY, {rat(0), rat(0)})),
    };
    return F;
}

GradedFamily fixture_5_1_3() {
    GradedFamily F;
    F.group = ValueGroup::rational_line(true);
    F.designated_t = rat(1);
    Cut V = v_ring(F.group);
    F.closed_form = ClosedFormData{V, ValueVector::single(Slot::y(rat(0)), PiLinear(rat(-1))),
                                   GradedMap{MapFamily::Fd, PiLinear(rat(1))}, ValueVector{},
                                   std::nullopt};
    return F;
}

GradedFamily fixture_5_2() {
    GradedFamily F;
    F.group = ValueGroup::rational_line();
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Any, tmpl({{Slot::y(rat(0)), lin(none(), pilinear_pi(rat(-1)))}}, true)),
    };
    return F;
}

GradedFamily fixture_5_3_1() {
    GradedFamily F;
    F.group = ValueGroup::lex();
    F.sigma.rate = rat(1);
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Pos, tmpl({{Slot::z(), lin(none(), PiLinear(rat(1)))}}, false)),
        piece(CutRulePiece::Neg, tmpl({{Slot::z(), lin(none(), PiLinear(rat(1)))}}, true)),
    };
    return F;
}

GradedFamily fixture_5_3_2() {
    GradedFamily F;
    F.group = ValueGroup::lex();
    F.sigma.rate = rat(1);
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Pos, tmpl({{Slot::z(), lin(none(), PiLinear(rat(1)))}}, true)),
        piece(CutRulePiece::Neg, tmpl({{Slot::z(), lin(none(), PiLinear(rat(1)))}}, false)),
    };
    return F;
}

GradedFamily fixture_5_4() {
    GradedFamily F;
    F.group = ValueGroup::lex();
    F.sigma.rate = rat(1);
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Pos,
              tmpl({{Slot::z(), lin(none(), PiLinear(rat(-2)))}}, false, Window::LtY, {rat(0), rat(0)})),
        piece(CutRulePiece::Neg,
              tmpl({{Slot::z(), lin(none(), PiLinear(rat(-2)))}}, true, Window::LtY, {rat(0), rat(1)})),
    };
    return F;
}

GradedFamily fixture_5_5() {
    GradedFamily F;
    F.group = ValueGroup::lex();
    F.sigma.rate = rat(1);
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Pos,
              tmpl({{Slot::z(), lin(none(), PiLinear(rat(1)))}}, false, Window::LtY, {rat(0), rat(-2)})),
        piece(CutRulePiece::Neg,
              tmpl({{Slot::z(), lin(none(), PiLinear(rat(1)))}}, true, Window::LtY, {rat(0), rat(0)})),
    };
    return F;
}

GradedFamily fixture_5_6() {
    GradedFamily F;
    F.group = ValueGroup::lex(rat(1));
    F.sigma.rate = rat(1);
    F.subgroup_h0 = rat(1);
    F.designated_t = rat(1, 2);
    std::vector<std::pair<Slot, LinearPi>> head = {
        {Slot::z(), lin(none(), PiLinear(rat(-1)))},
        {Slot::y(rat(0)), lin(none(), pilinear_pi(rat(-1)))},
    };
    F.pieces = {
        piece(CutRulePiece::Zero, at_zero()),
        piece(CutRulePiece::Pos, tmpl(head, false)),
        piece(CutRulePiece::Neg, tmpl(head, true)),
    };
    return F;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"5.1.1", "5.1.2", "5.1.3", "5.2", "5.3.1",
                                                   "5.3.2", "5.4",   "5.5",   "5.6"};
    return names;
}

Fixture make_fixture(const std::string& name) {
    if (name == "5.1.1") return {name, fixture_5_1_1(), 'a'};
    if (name == "5.1.2") return {name, fixture_5_1_2(), 'f'};
    if (name == "5.1.3") return {name, fixture_5_1_3(), 'e'};
    if (name == "5.2") return {name, fixture_5_2(), 'g'};
    if (name == "5.3.1") return {name, fixture_5_3_1(), 'd'};
    if (name == "5.3.2") return {name, fixture_5_3_2(), 'f'};
    if (name == "5.4") return {name, fixture_5_4(), 'b'};
    if (name == "5.5") return {name, fixture_5_5(), 'c'};
    if (name == "5.6") return {name, fixture_5_6(), 'h'};
    throw ValidationError("unknown example '" + name + "'");
}

std::vector<FixtureRow> run_all(int bound) {
    std::vector<FixtureRow> rows;
    for (const std::string& name : fixture_names()) {
        Fixture fx = make_fixture(name);
        FixtureRow row;
        row.name = name;
        row.expected = fx.expected;
        try {
            TypeVerdict v = classify_global(fx.family, fx.family.default_grid(), bound);
            row.got = v.letter;
            row.bound = v.bound;
            row.pass = v.letter == fx.expected;
            row.note = v.caveat;
            if (!row.pass && !v.witnesses.empty()) row.note = v.witnesses.front();
        } catch (const Error& e) {
            row.got = '!';
            row.pass = false;
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gve
