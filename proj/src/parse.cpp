#include "gve/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gve {

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {
        tok_ = scan();
        next_ = scan();
    }

    const Token& peek() const { return tok_; }
    const Token& peek2() const { return next_; }

    Token take() {
        Token t = tok_;
        tok_ = next_;
        next_ = scan();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (found '" + (tok_.kind == Token::End ? "<end>" : tok_.text) + "')",
                         tok_.line, tok_.col);
    }

    Token expect_punct(const std::string& p) {
        if (tok_.kind != Token::Punct || tok_.text != p) fail("expected '" + p + "'");
        return take();
    }

    Token expect_ident(const std::string& what) {
        if (tok_.kind != Token::Ident) fail("expected " + what);
        return take();
    }

    bool accept_punct(const std::string& p) {
        if (tok_.kind == Token::Punct && tok_.text == p) {
            take();
            return true;
        }
        return false;
    }

    bool accept_ident(const std::string& word) {
        if (tok_.kind == Token::Ident && tok_.text == word) {
            take();
            return true;
        }
        return false;
    }

  private:
    Token scan() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '.')) {
                s += text_[pos_];
                bump();
            }
            // hyphenated keywords like rational-line
            while (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_ + 1]))) {
                s += '-';
                bump();
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    s += text_[pos_];
                    bump();
                }
            }
            return {Token::Ident, s, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '.')) {
                s += text_[pos_];
                bump();
            }
            return {Token::Number, s, line, col};
        }
        for (const char* op : {"->", ">=", "!=", "<="}) {
            std::size_t n = std::string(op).size();
            if (text_.compare(pos_, n, op) == 0) {
                for (std::size_t i = 0; i < n; ++i) bump();
                return {Token::Punct, op, line, col};
            }
        }
        bump();
        return {Token::Punct, std::string(1, c), line, col};
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
    Token next_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    InstanceDoc parse() {
        parse_valuegroup();
        while (lex_.peek().kind == Token::Ident && lex_.peek().text != "family") parse_decl();
        parse_family();
        if (lex_.peek().kind != Token::End) lex_.fail("unexpected trailing input");
        finish();
        return std::move(doc_);
    }

  private:
    Lexer lex_;
    InstanceDoc doc_;
    std::optional<ValueVector> bval_;
    std::optional<ValueVector> alpha_;
    struct Case {
        CutRulePiece::Cond cond = CutRulePiece::Any;
        std::optional<Rational> literal;  // table row when set
        CutTemplate tmpl;
        // closed-form case
        bool closed_form = false;
        std::string ring;
        GradedMap map;
        bool with_alpha = false;
        // plain ring reference
        bool is_ringref = false;
        int ringref_line = 1;
        int ringref_col = 1;
    };
    std::vector<Case> cases_;
    std::vector<std::pair<Rational, Case>> exceptions_;

    Rational parse_number() {
        bool neg = lex_.accept_punct("-");
        Token t = lex_.take();
        if (t.kind != Token::Number) throw ParseError("expected a number", t.line, t.col);
        Rational num;
        try {
            num = Rational(Int(t.text));
        } catch (const std::exception&) {
            throw ParseError("malformed integer '" + t.text + "'", t.line, t.col);
        }
        if (lex_.accept_punct("/")) {
            Token d = lex_.take();
            if (d.kind != Token::Number) throw ParseError("expected a denominator", d.line, d.col);
            Int den(d.text);
            if (den == 0) throw ParseError("zero denominator", d.line, d.col);
            num /= Rational(den);
        }
        return neg ? -num : num;
    }

    static bool starts_term(const Token& t) {
        return t.kind == Token::Number || (t.kind == Token::Ident && (t.text == "pi" || t.text == "r"));
    }

    // Linear pi-expression in the grade variable r:
    //   term := RAT | 'pi' | 'r' | products of these with '*'
    LinearPi parse_linear() {
        LinearPi acc;
        bool first = true;
        for (;;) {
            int sgn = 1;
            if (lex_.peek().kind == Token::Punct &&
                (lex_.peek().text == "-" || lex_.peek().text == "+") &&
                (first || starts_term(lex_.peek2()))) {
                sgn = lex_.take().text == "-" ? -1 : 1;
            } else if (!first) {
                break;
            }
            Rational coeff(1);
            bool has_r = false, has_pi = false, any = false;
            for (;;) {
                const Token& t = lex_.peek();
                if (t.kind == Token::Number) {
                    coeff *= parse_number();
                    any = true;
                } else if (t.kind == Token::Ident && t.text == "pi") {
                    if (has_pi) lex_.fail("expression is not linear in pi");
                    has_pi = true;
                    any = true;
                    lex_.take();
                } else if (t.kind == Token::Ident && t.text == "r") {
                    if (has_r) lex_.fail("expression is not linear in the grade variable");
                    has_r = true;
                    any = true;
                    lex_.take();
                } else {
                    break;
                }
                if (!lex_.accept_punct("*")) break;
            }
            if (!any) lex_.fail("expected a value term");
            coeff *= Rational(sgn);
            PiLinear contrib = has_pi ? PiLinear(Rational(0), coeff) : PiLinear(coeff);
            if (has_r) acc.c1 = acc.c1 + contrib;
            else acc.c0 = acc.c0 + contrib;
            first = false;
        }
        return acc;
    }

    // boundexpr: linear | vec{ key: linear, ... }
    std::vector<std::pair<Slot, LinearPi>> parse_boundary() {
        std::vector<std::pair<Slot, LinearPi>> head;
        if (lex_.peek().kind == Token::Ident && lex_.peek().text == "vec") {
            lex_.take();
            lex_.expect_punct("{");
            if (!lex_.accept_punct("}")) {
                do {
                    Slot slot = Slot::y(rat(0));
                    if (lex_.accept_ident("z")) slot = Slot::z();
                    else slot = Slot::y(parse_number());
                    lex_.expect_punct(":");
                    head.emplace_back(slot, parse_linear());
                } while (lex_.accept_punct(","));
                lex_.expect_punct("}");
            }
            return head;
        }
        LinearPi v = parse_linear();
        if (!(v == LinearPi{}))
            head.emplace_back(Slot::y(rat(0)), v);
        return head;
    }

    void parse_tail(CutTemplate& t, bool strict_from_cmp, bool have_cmp) {
        // (-inf|+inf) @ (z+ | linear-rat [+])
        bool strict_tail;
        if (lex_.accept_punct("-")) {
            Token inf = lex_.expect_ident("'inf'");
            if (inf.text != "inf") throw ParseError("expected 'inf'", inf.line, inf.col);
            strict_tail = false;
        } else if (lex_.accept_punct("+")) {
            Token inf = lex_.expect_ident("'inf'");
            if (inf.text != "inf") throw ParseError("expected 'inf'", inf.line, inf.col);
            strict_tail = true;
        } else {
            lex_.fail("expected -inf or +inf");
            return;
        }
        if (have_cmp && strict_from_cmp != strict_tail)
            lex_.fail("tail sign contradicts the cut comparison");
        t.strict = strict_tail;
        lex_.expect_punct("@");
        if (lex_.accept_ident("z")) {
            lex_.expect_punct("+");
            t.win_kind = Window::LeZ;
            return;
        }
        LinearPi cutoff = parse_linear();
        if (!cutoff.c0.is_rational() || !cutoff.c1.is_rational())
            lex_.fail("tail index must be rational");
        t.win_y = {cutoff.c0.a, cutoff.c1.a};
        t.win_kind = lex_.accept_punct("+") ? Window::LeY : Window::LtY;
    }

    CutTemplate parse_cut_template() {
        lex_.expect_punct("(");
        CutTemplate t;
        bool have_cmp = false;
        if (lex_.accept_ident("tail")) {
            lex_.expect_punct(":");
            parse_tail(t, false, false);
        } else {
            if (lex_.accept_punct(">=")) t.strict = false;
            else if (lex_.accept_punct(">")) t.strict = true;
            else lex_.fail("expected '>=', '>' or 'tail:'");
            have_cmp = true;
            t.head = parse_boundary();
            if (lex_.accept_punct(",")) {
                lex_.expect_ident("tail keyword");
                lex_.expect_punct(":");
                parse_tail(t, t.strict, have_cmp);
            }
        }
        lex_.expect_punct(")");
        return t;
    }

    Case parse_cutexpr() {
        Case c{};
        c.cond = CutRulePiece::Any;
        if (lex_.peek().kind == Token::Ident && lex_.peek().text == "cut") {
            lex_.take();
            c.tmpl = parse_cut_template();
            return c;
        }
        Token name = lex_.expect_ident("a ring name or 'cut'");
        if (lex_.accept_punct("*")) {
            // NAME * b^(fam(d)) [* alpha]
            Token b = lex_.expect_ident("'b'");
            if (b.text != "b") throw ParseError("expected 'b'", b.line, b.col);
            lex_.expect_punct("^");
            lex_.expect_punct("(");
            Token fam = lex_.expect_ident("a map family (fd, fd1, fdm1)");
            auto family = parse_family_name(fam);
            lex_.expect_punct("(");
            LinearPi d = parse_linear();
            if (!(d.c1 == PiLinear()))
                throw ParseError("map parameter must not involve the grade variable", fam.line,
                                 fam.col);
            lex_.expect_punct(")");
            lex_.expect_punct(")");
            c.closed_form = true;
            c.ring = name.text;
            c.map = GradedMap{family, d.c0};
            if (lex_.accept_punct("*")) {
                Token a = lex_.expect_ident("'alpha'");
                if (a.text != "alpha") throw ParseError("expected 'alpha'", a.line, a.col);
                c.with_alpha = true;
            }
            return c;
        }
        // plain ring reference
        c.closed_form = false;
        c.ring = name.text;
        c.tmpl.win_kind = Window::All;  // resolved in finish()
        c.tmpl.strict = false;
        c.with_alpha = false;
        c.map.d = PiLinear();
        c.ringref_line = name.line;
        c.ringref_col = name.col;
        c.is_ringref = true;
        return c;
    }

    MapFamily parse_family_name(const Token& t) {
        auto f = gve::parse_family(t.text);
        if (!f) throw ParseError("unknown map family '" + t.text + "'", t.line, t.col);
        return *f;
    }

    void parse_valuegroup() {
        Token kw = lex_.expect_ident("'valuegroup'");
        if (kw.text != "valuegroup") throw ParseError("expected 'valuegroup'", kw.line, kw.col);
        Token kind = lex_.expect_ident("a value group kind");
        if (kind.text == "rational-line") {
            doc_.group = ValueGroup::rational_line(lex_.accept_ident("discrete"));
        } else if (kind.text == "pi-line") {
            doc_.group = ValueGroup::pi_line();
            if (lex_.accept_ident("step")) doc_.group.pi_step = parse_number();
        } else if (kind.text == "lex") {
            doc_.group = ValueGroup::lex();
            if (lex_.accept_ident("step")) doc_.group.pi_step = parse_number();
            while (lex_.accept_ident("lattice")) {
                Token y = lex_.expect_ident("'y'");
                if (y.text != "y") throw ParseError("expected 'y'", y.line, y.col);
                lex_.expect_punct("@");
                Rational pos = parse_number();
                lex_.expect_punct("=");
                Token lat = lex_.expect_ident("a lattice name (int, rat, rat+pi)");
                if (lat.text == "int") doc_.group.y_overrides[pos] = SlotLattice::Integers;
                else if (lat.text == "rat") doc_.group.y_overrides[pos] = SlotLattice::Rationals;
                else throw ParseError("unknown lattice '" + lat.text + "'", lat.line, lat.col);
            }
        } else {
            throw ParseError("unknown value group kind '" + kind.text + "'", kind.line, kind.col);
        }
    }

    void parse_decl() {
        Token kw = lex_.expect_ident("a declaration");
        if (kw.text == "ring") {
            Token name = lex_.expect_ident("a ring name");
            lex_.expect_punct("=");
            Token cut_kw = lex_.expect_ident("'cut'");
            if (cut_kw.text != "cut") throw ParseError("expected 'cut'", cut_kw.line, cut_kw.col);
            CutTemplate t = parse_cut_template();
            for (const auto& [slot, lin] : t.head)
                if (!(lin.c1 == PiLinear()))
                    throw ParseError("ring boundaries must not involve the grade variable",
                                     cut_kw.line, cut_kw.col);
            if (t.win_y.c1 != Rational(0))
                throw ParseError("ring windows must not involve the grade variable", cut_kw.line,
                                 cut_kw.col);
            doc_.rings.emplace(name.text, t.instantiate(doc_.group, Rational(0)));
        } else if (kw.text == "sigma") {
            Token rate = lex_.expect_ident("'rate'");
            if (rate.text != "rate") throw ParseError("expected 'rate'", rate.line, rate.col);
            doc_.sigma.rate = parse_number();
        } else if (kw.text == "subgroup") {
            Token h = lex_.expect_ident("'H'");
            if (h.text != "H") throw ParseError("expected 'H'", h.line, h.col);
            lex_.expect_punct("=");
            if (lex_.accept_ident("Q")) {
                doc_.subgroup_full = true;
            } else {
                doc_.subgroup_h0 = parse_number();
                Token z = lex_.expect_ident("'Z'");
                if (z.text != "Z") throw ParseError("expected 'Z'", z.line, z.col);
            }
        } else if (kw.text == "designate") {
            Token t = lex_.expect_ident("'t'");
            if (t.text != "t") throw ParseError("expected 't'", t.line, t.col);
            lex_.expect_punct("=");
            doc_.designated_t = parse_number();
        } else if (kw.text == "expected") {
            Token letter = lex_.expect_ident("a type letter a..h");
            if (letter.text.size() != 1 || letter.text[0] < 'a' || letter.text[0] > 'h')
                throw ParseError("expected a type letter a..h", letter.line, letter.col);
            doc_.expected = letter.text[0];
            if (lex_.accept_punct("@")) {
                Rational n = parse_number();
                doc_.expected_bound = static_cast<int>(n.numerator().convert_to<long long>());
            }
        } else if (kw.text == "bval") {
            bval_ = parse_vector_value();
        } else if (kw.text == "alpha") {
            alpha_ = parse_vector_value();
        } else {
            throw ParseError("unknown declaration '" + kw.text + "'", kw.line, kw.col);
        }
    }

    ValueVector parse_vector_value() {
        auto head = parse_boundary();
        ValueVector v;
        for (const auto& [slot, lin] : head) {
            if (!(lin.c1 == PiLinear()))
                lex_.fail("vector values must not involve the grade variable");
            v.set(slot, lin.c0);
        }
        return v;
    }

    void parse_family() {
        Token kw = lex_.expect_ident("'family'");
        if (kw.text != "family") throw ParseError("expected 'family'", kw.line, kw.col);
        doc_.family_name = lex_.expect_ident("a family name").text;
        lex_.expect_punct(":");
        bool any = false;
        for (;;) {
            if (lex_.accept_ident("grade")) {
                any = true;
                Case c = parse_case();
                cases_.push_back(std::move(c));
            } else if (lex_.accept_ident("exception")) {
                Rational at = parse_number();
                lex_.expect_punct("->");
                Case c = parse_cutexpr();
                exceptions_.emplace_back(at, std::move(c));
            } else {
                break;
            }
        }
        if (!any) lex_.fail("family needs at least one case");
    }

    Case parse_case() {
        // pattern: 0 | RAT | r | r>0 | r<0 | r != 0 | r in H | r notin H
        CutRulePiece::Cond cond = CutRulePiece::Any;
        std::optional<Rational> literal;
        if (lex_.peek().kind == Token::Ident && lex_.peek().text == "r") {
            lex_.take();
            if (lex_.accept_punct(">")) {
                Rational z = parse_number();
                if (z != Rational(0)) lex_.fail("grade patterns compare against 0");
                cond = CutRulePiece::Pos;
            } else if (lex_.accept_punct("<")) {
                Rational z = parse_number();
                if (z != Rational(0)) lex_.fail("grade patterns compare against 0");
                cond = CutRulePiece::Neg;
            } else if (lex_.accept_ident("in")) {
                Token h = lex_.expect_ident("'H'");
                if (h.text != "H") throw ParseError("expected 'H'", h.line, h.col);
                cond = CutRulePiece::InH;
            } else if (lex_.accept_ident("notin")) {
                Token h = lex_.expect_ident("'H'");
                if (h.text != "H") throw ParseError("expected 'H'", h.line, h.col);
                cond = CutRulePiece::NotInH;
            } else {
                cond = CutRulePiece::Any;
            }
        } else {
            Rational v = parse_number();
            if (v == Rational(0)) cond = CutRulePiece::Zero;
            else literal = v;
        }
        lex_.expect_punct("->");
        Case c = parse_cutexpr();
        c.cond = cond;
        c.literal = literal;
        return c;
    }

    void finish() {
        GradedFamily& F = doc_.family;
        F.group = doc_.group;
        F.sigma = doc_.sigma;
        F.subgroup_h0 = doc_.subgroup_h0;
        F.designated_t = doc_.designated_t;
        if (doc_.group.is_line() && doc_.sigma.rate != Rational(0))
            throw ParseError("line value groups admit only sigma rate 0", 1, 1);

        Cut V = v_ring(doc_.group);
        auto v_it = doc_.rings.find("V");
        if (v_it == doc_.rings.end()) doc_.rings.emplace("V", V);
        else if (v_it->second.whole) throw ParseError("V = K is not allowed", 1, 1);
        else if (!cut_equal(v_it->second, V))
            throw ParseError("ring V must be cut(>= 0)", 1, 1);

        auto resolve_ring = [&](const Case& c) -> Cut {
            auto it = doc_.rings.find(c.ring);
            if (it == doc_.rings.end())
                throw ParseError("undeclared ring '" + c.ring + "'", c.ringref_line, c.ringref_col);
            return it->second;
        };

        for (const Case& c : cases_) {
            if (c.cond != CutRulePiece::Zero || c.closed_form) continue;
            Cut zero = c.is_ringref ? resolve_ring(c) : c.tmpl.instantiate(doc_.group, Rational(0));
            if (!cut_equal(zero, V))
                throw ParseError("the grade-0 component must be V = cut(>= 0)", 1, 1);
        }

        bool any_closed = std::any_of(cases_.begin(), cases_.end(),
                                      [](const Case& c) { return c.closed_form; });
        bool any_literal = std::any_of(cases_.begin(), cases_.end(),
                                       [](const Case& c) { return c.literal.has_value(); });

        if (any_closed) {
            const Case* main = nullptr;
            for (const Case& c : cases_) {
                if (c.closed_form) {
                    if (main) throw ParseError("only one closed-form case is allowed", 1, 1);
                    main = &c;
                } else if (c.cond != CutRulePiece::Zero) {
                    throw ParseError("closed-form families admit only a grade-0 companion case", 1, 1);
                }
            }
            if (!bval_) throw ParseError("closed-form families need a 'bval' declaration", 1, 1);
            ClosedFormData cf;
            cf.W = resolve_ring(*main);
            cf.b_val = *bval_;
            cf.f = main->map;
            cf.alpha_base = main->with_alpha ? (alpha_ ? *alpha_ : ValueVector{}) : ValueVector{};
            if (main->with_alpha && !alpha_)
                throw ParseError("case uses alpha but no 'alpha' declaration is present", 1, 1);
            if (!exceptions_.empty()) {
                TableRows rows;
                for (const auto& [at, c] : exceptions_) {
                    Cut cut = c.is_ringref ? resolve_ring(c)
                                           : c.tmpl.instantiate(doc_.group, at);
                    rows.rows.emplace(at, std::move(cut));
                }
                cf.exceptional = std::move(rows);
            }
            F.closed_form = std::move(cf);
        } else if (any_literal) {
            for (const Case& c : cases_)
                if (!c.literal && c.cond != CutRulePiece::Zero)
                    throw ParseError("table families take literal grades only", 1, 1);
            TableRows rows;
            rows.rows.emplace(Rational(0), V);
            for (const Case& c : cases_) {
                if (!c.literal) continue;
                Cut cut = c.is_ringref ? resolve_ring(c) : c.tmpl.instantiate(doc_.group, *c.literal);
                rows.rows.emplace(*c.literal, std::move(cut));
            }
            F.table = std::move(rows);
        } else {
            for (const Case& c : cases_) {
                CutRulePiece p;
                p.cond = c.cond;
                if (c.is_ringref) {
                    Cut ring = resolve_ring(c);
                    p.tmpl.win_kind = ring.win.kind;
                    p.tmpl.win_y = {ring.win.y, Rational(0)};
                    p.tmpl.strict = ring.strict;
                    for (const auto& [slot, val] : ring.head.entries)
                        p.tmpl.head.emplace_back(slot, LinearPi{val, PiLinear()});
                } else {
                    p.tmpl = c.tmpl;
                }
                F.pieces.push_back(std::move(p));
            }
            // totality check over the default grid
            for (const Rational& r : F.default_grid()) {
                bool covered = r == Rational(0);
                for (const CutRulePiece& p : F.pieces)
                    if (!covered && p.matches(r, F.subgroup_h0)) covered = true;
                if (!covered)
                    throw ParseError("family does not cover grade " + to_string(r) +
                                         "; add a matching case",
                                     1, 1);
            }
        }
        if (exceptions_.empty() || any_closed) return;
        throw ParseError("exception rows apply only to closed-form families", 1, 1);
    }
};

std::string linear_str(const LinearPi& v) {
    // c0.a + c0.b pi + c1.a r + c1.b r pi
    std::vector<std::string> parts;
    auto add = [&](const Rational& coeff, const std::string& sym) {
        if (coeff == Rational(0)) return;
        std::string s;
        Rational a = abs(coeff);
        bool neg = coeff < Rational(0);
        if (sym.empty()) s = to_string(a);
        else if (a == Rational(1)) s = sym;
        else s = to_string(a) + "*" + sym;
        if (parts.empty()) parts.push_back(neg ? "-" + s : s);
        else parts.push_back((neg ? "- " : "+ ") + s);
    };
    add(v.c0.a, "");
    add(v.c0.b, "pi");
    add(v.c1.a, "r");
    add(v.c1.b, "r*pi");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
    return out;
}

std::string template_str(const CutTemplate& t) {
    std::string head;
    if (t.head.empty()) {
        head = "0";
    } else if (t.head.size() == 1 && t.head[0].first == Slot::y(rat(0))) {
        head = linear_str(t.head[0].second);
    } else {
        head = "vec{";
        bool first = true;
        for (const auto& [slot, lin] : t.head) {
            if (!first) head += ", ";
            first = false;
            head += to_string(slot) + ": " + linear_str(lin);
        }
        head += "}";
    }
    std::string s = "cut(";
    s += t.strict ? "> " : ">= ";
    s += head;
    if (t.win_kind != Window::All) {
        s += ", tail: ";
        s += t.strict ? "+inf@" : "-inf@";
        if (t.win_kind == Window::LeZ) {
            s += "z+";
        } else {
            s += linear_str(LinearPi{PiLinear(t.win_y.c0), PiLinear(t.win_y.c1)});
            if (t.win_kind == Window::LeY) s += "+";
        }
    }
    return s + ")";
}

std::string vector_value_str(const ValueVector& v) { return to_string(v); }

}  // namespace

InstanceDoc parse_instance(const std::string& text) { return Parser(text).parse(); }

std::string print_instance(const InstanceDoc& doc) {
    std::ostringstream out;
    out << "valuegroup ";
    switch (doc.group.kind) {
        case GroupKind::RationalLine:
            out << "rational-line";
            if (doc.group.line_lattice == SlotLattice::Integers) out << " discrete";
            break;
        case GroupKind::PiLine:
            out << "pi-line";
            if (doc.group.pi_step != Rational(1)) out << " step " << to_string(doc.group.pi_step);
            break;
        case GroupKind::LexVector:
            out << "lex";
            if (doc.group.pi_step != Rational(1)) out << " step " << to_string(doc.group.pi_step);
            for (const auto& [pos, lat] : doc.group.y_overrides)
                out << " lattice y@" << to_string(pos) << " = "
                    << (lat == SlotLattice::Integers ? "int" : "rat");
            break;
    }
    out << "\n";
    for (const auto& [name, ring] : doc.rings) {
        CutTemplate t;
        t.win_kind = ring.win.kind;
        t.win_y = {ring.win.y, Rational(0)};
        t.strict = ring.strict;
        for (const auto& [slot, val] : ring.head.entries)
            t.head.emplace_back(slot, LinearPi{val, PiLinear()});
        out << "ring " << name << " = " << template_str(t) << "\n";
    }
    out << "sigma rate " << to_string(doc.sigma.rate) << "\n";
    if (doc.subgroup_full) out << "subgroup H = Q\n";
    else if (doc.subgroup_h0) out << "subgroup H = " << to_string(*doc.subgroup_h0) << " Z\n";
    if (doc.designated_t) out << "designate t = " << to_string(*doc.designated_t) << "\n";
    if (doc.expected) {
        out << "expected " << *doc.expected;
        if (doc.expected_bound) out << " @ " << *doc.expected_bound;
        out << "\n";
    }
    const GradedFamily& F = doc.family;
    if (F.closed_form) {
        out << "bval " << vector_value_str(F.closed_form->b_val) << "\n";
        if (!F.closed_form->alpha_base.is_zero())
            out << "alpha " << vector_value_str(F.closed_form->alpha_base) << "\n";
    }
    out << "family " << doc.family_name << ":\n";
    if (F.closed_form) {
        std::string ring_name = "V";
        for (const auto& [name, ring] : doc.rings)
            if (cut_equal(ring, F.closed_form->W)) ring_name = name;
        out << "  grade r -> " << ring_name << " * b^(" << to_string(F.closed_form->f.family) << "("
            << to_string(F.closed_form->f.d) << "))";
        if (!F.closed_form->alpha_base.is_zero()) out << " * alpha";
        out << "\n";
        if (F.closed_form->exceptional)
            for (const auto& [at, cut] : F.closed_form->exceptional->rows) {
                CutTemplate t;
                t.win_kind = cut.win.kind;
                t.win_y = {cut.win.y, Rational(0)};
                t.strict = cut.strict;
                for (const auto& [slot, val] : cut.head.entries)
                    t.head.emplace_back(slot, LinearPi{val, PiLinear()});
                out << "  exception " << to_string(at) << " -> " << template_str(t) << "\n";
            }
    } else if (F.table) {
        for (const auto& [at, cut] : F.table->rows) {
            if (at == Rational(0)) continue;
            CutTemplate t;
            t.win_kind = cut.win.kind;
            t.win_y = {cut.win.y, Rational(0)};
            t.strict = cut.strict;
            for (const auto& [slot, val] : cut.head.entries)
                t.head.emplace_back(slot, LinearPi{val, PiLinear()});
            out << "  grade " << to_string(at) << " -> " << template_str(t) << "\n";
        }
        out << "  grade 0 -> cut(>= 0)\n";
    } else {
        for (const CutRulePiece& p : F.pieces)
            out << "  grade " << to_string(p.cond) << " -> " << template_str(p.tmpl) << "\n";
    }
    return out.str();
}

GenPoly parse_gen_poly(const std::string& text) {
    Lexer lex(text);
    GenPoly out;
    auto parse_exponent = [&]() -> PiLinear {
        lex.expect_punct("^");
        lex.expect_punct("(");
        // reuse the linear parser at a fixed grade: no 'r' allowed here
        PiLinear acc;
        int sgn = 1;
        bool first = true;
        for (;;) {
            if (lex.accept_punct("-")) sgn = -1;
            else if (lex.accept_punct("+")) sgn = 1;
            else if (!first) break;
            Rational coeff(1);
            bool has_pi = false, any = false;
            for (;;) {
                const Token& t = lex.peek();
                if (t.kind == Token::Number) {
                    Token n = lex.take();
                    Rational q(Int(n.text));
                    if (lex.accept_punct("/")) {
                        Token d = lex.take();
                        if (d.kind != Token::Number)
                            throw ParseError("expected a denominator", d.line, d.col);
                        q /= Rational(Int(d.text));
                    }
                    coeff *= q;
                    any = true;
                } else if (t.kind == Token::Ident && t.text == "pi") {
                    lex.take();
                    has_pi = true;
                    any = true;
                } else {
                    break;
                }
                if (!lex.accept_punct("*")) break;
            }
            if (!any) lex.fail("expected an exponent term");
            if (has_pi) acc.b += Rational(sgn) * coeff;
            else acc.a += Rational(sgn) * coeff;
            first = false;
            const Token& nxt = lex.peek();
            if (!(nxt.kind == Token::Punct && (nxt.text == "+" || nxt.text == "-"))) break;
        }
        lex.expect_punct(")");
        return acc;
    };

    bool first_term = true;
    while (lex.peek().kind != Token::End) {
        int sgn = 1;
        if (lex.accept_punct("-")) sgn = -1;
        else if (lex.accept_punct("+")) sgn = 1;
        else if (!first_term) lex.fail("expected '+' or '-' between terms");
        first_term = false;

        Rational coeff(sgn);
        ValueVector mono;
        bool any_factor = false;
        for (;;) {
            const Token& t = lex.peek();
            if (t.kind == Token::Number) {
                Token n = lex.take();
                Rational q(Int(n.text));
                if (lex.accept_punct("/")) {
                    Token d = lex.take();
                    if (d.kind != Token::Number)
                        throw ParseError("expected a denominator", d.line, d.col);
                    q /= Rational(Int(d.text));
                }
                coeff *= q;
                any_factor = true;
            } else if (t.kind == Token::Ident && (t.text == "Y" || t.text == "Z")) {
                Token name = lex.take();
                Slot slot = Slot::y(Rational(0));
                if (name.text == "Z") {
                    slot = Slot::z();
                } else if (lex.accept_punct("[")) {
                    bool neg = lex.accept_punct("-");
                    Token idx = lex.take();
                    if (idx.kind != Token::Number)
                        throw ParseError("expected a slot index", idx.line, idx.col);
                    Rational pos(Int(idx.text));
                    if (lex.accept_punct("/")) {
                        Token d = lex.take();
                        if (d.kind != Token::Number)
                            throw ParseError("expected a denominator", d.line, d.col);
                        pos /= Rational(Int(d.text));
                    }
                    lex.expect_punct("]");
                    slot = Slot::y(neg ? -pos : pos);
                }
                PiLinear e = parse_exponent();
                if (slot.level == Slot::Z && !e.is_rational())
                    throw ParseError("Z exponents must be rational", name.line, name.col);
                mono.set(slot, mono.at(slot) + e);
                any_factor = true;
            } else {
                break;
            }
            if (!lex.accept_punct("*")) break;
        }
        if (!any_factor) lex.fail("expected a monomial");
        out = poly_add(out, GenPoly::monomial(coeff, mono));
    }
    if (out.terms.empty() && first_term) throw ParseError("empty element", 1, 1);
    return out;
}

std::string to_string(const GenPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, mono] : p.terms) {
        Rational a = coeff < Rational(0) ? -coeff : coeff;
        out += first ? (coeff < Rational(0) ? "-" : "") : (coeff < Rational(0) ? " - " : " + ");
        first = false;
        std::string factors;
        for (const auto& [slot, e] : mono.entries) {
            if (!factors.empty()) factors += "*";
            factors += (slot.level == Slot::Z ? std::string("Z") : "Y[" + to_string(slot.pos) + "]");
            factors += "^(" + to_string(e) + ")";
        }
        if (factors.empty()) out += to_string(a);
        else if (a == Rational(1)) out += factors;
        else out += to_string(a) + "*" + factors;
    }
    return out;
}

InstanceDoc fixture_doc(const std::string& name) {
    Fixture fx = make_fixture(name);
    InstanceDoc doc;
    doc.group = fx.family.group;
    doc.sigma = fx.family.sigma;
    doc.subgroup_h0 = fx.family.subgroup_h0;
    doc.designated_t = fx.family.designated_t;
    doc.expected = fx.expected;
    if (fx.expected == 'g') doc.expected_bound = 16;
    doc.family_name = "A";
    doc.family = fx.family;
    doc.rings.emplace("V", v_ring(fx.family.group));
    return doc;
}

}  // namespace gve
