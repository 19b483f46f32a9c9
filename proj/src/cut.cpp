#include "gve/cut.hpp"

#include <algorithm>
#include <tuple>

namespace gve {

namespace {

// Total order key: windows are nested prefixes of the slot order.
std::tuple<int, Rational, int> window_key(const Window& w) {
    switch (w.kind) {
        case Window::LeZ: return {0, Rational(0), 0};
        case Window::LtY: return {1, w.y, 0};
        case Window::LeY: return {1, w.y, 1};
        case Window::All: return {2, Rational(0), 0};
    }
    return {2, Rational(0), 0};
}

Window le_of(const Slot& s) {
    return s.level == Slot::Z ? Window::le_z() : Window::le_y(s.pos);
}

ValueVector restrict_to(const ValueVector& v, const Window& w) {
    ValueVector out;
    for (const auto& [slot, val] : v.entries)
        if (w.contains(slot)) out.entries.emplace_back(slot, val);
    return out;
}

Ordering cmp_in_window(const ValueVector& a, const ValueVector& b, const Window& w) {
    auto ia = a.entries.begin(), ib = b.entries.begin();
    auto skip = [&](auto& it, const auto& end) {
        while (it != end && !w.contains(it->first)) ++it;
    };
    skip(ia, a.entries.end());
    skip(ib, b.entries.end());
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
            int s = sign(ia->second);
            if (s != 0) return s > 0 ? Ordering::Greater : Ordering::Less;
            ++ia;
        } else if (ia == a.entries.end() || ib->first < ia->first) {
            int s = sign(ib->second);
            if (s != 0) return s > 0 ? Ordering::Less : Ordering::Greater;
            ++ib;
        } else {
            Ordering o = pilinear_cmp(ia->second, ib->second);
            if (o != Ordering::Equal) return o;
            ++ia;
            ++ib;
        }
        skip(ia, a.entries.end());
        skip(ib, b.entries.end());
    }
    return Ordering::Equal;
}

std::optional<Slot> window_last_slot(const ValueGroup& g, const Window& w) {
    if (g.is_line()) return Slot::y(Rational(0));  // window normalized to All
    switch (w.kind) {
        case Window::LeZ: return Slot::z();
        case Window::LeY: return Slot::y(w.y);
        default: return std::nullopt;
    }
}

void normalize_line_window(const ValueGroup& g, Window& w) {
    if (!g.is_line() || w.kind == Window::All) return;
    Slot y0 = Slot::y(Rational(0));
    if (w.contains(y0)) {
        w = Window::all();
        return;
    }
    throw ValidationError("window excludes the only slot of a line value group");
}

void check_same_group(const Cut& a, const Cut& b) {
    if (!(a.group == b.group)) throw ValidationError("value group kind mismatch");
}

// Deterministic probe vectors around a cut's boundary, used by the sampling
// cross-checks of the symbolic order/residual computations.
std::vector<ValueVector> probe_battery(const Cut& c) {
    std::vector<ValueVector> probes;
    const PiLinear one{Rational(1)};
    probes.push_back(ValueVector{});
    probes.push_back(c.head);
    auto push_off = [&](const Slot& s, const PiLinear& d) {
        ValueVector v = c.head;
        v.set(s, v.at(s) + d);
        probes.push_back(v);
    };
    for (const auto& [slot, val] : c.head.entries) {
        push_off(slot, one);
        push_off(slot, -one);
    }
    if (!c.group.is_line()) {
        push_off(Slot::z(), one);
        push_off(Slot::z(), -one);
    }
    // A slot deep inside the window and one just outside it.
    Rational deepest(0);
    for (const auto& [slot, val] : c.head.entries)
        if (slot.level == Slot::Y && slot.pos > deepest) deepest = slot.pos;
    Slot inside = Slot::y(deepest + 1), outside = inside;
    switch (c.win.kind) {
        case Window::All: break;
        case Window::LtY: inside = Slot::y(c.win.y - 1); outside = Slot::y(c.win.y); break;
        case Window::LeY: inside = Slot::y(c.win.y); outside = Slot::y(c.win.y + 1); break;
        case Window::LeZ: inside = Slot::z(); outside = Slot::y(Rational(0)); break;
    }
    if (!c.group.is_line()) {
        push_off(inside, one);
        push_off(inside, -one);
        push_off(outside, one);
        push_off(outside, -one);
    } else {
        push_off(Slot::y(Rational(0)), one);
        push_off(Slot::y(Rational(0)), -one);
    }
    return probes;
}

ValueVector conj_mul(const ValueVector& x, const ValueVector& y) {
    return x + vec_twist(y, GroupAutomorphism(x.z_part()));
}

void cross_check_o_left(const Cut& c, const Cut& result) {
    for (const ValueVector& g : probe_battery(result)) {
        if (!cut_member(result, g)) continue;
        for (const ValueVector& x : probe_battery(c)) {
            if (!cut_member(c, x)) continue;
            if (!cut_member(c, conj_mul(g, x)))
                throw Error("o_left cross-check failed at " + to_string(g) + " * " + to_string(x));
        }
    }
}

void cross_check_residual(const Cut& J, const Cut& I, const Cut& result) {
    for (const ValueVector& g : probe_battery(result)) {
        if (!cut_member(result, g)) continue;
        for (const ValueVector& x : probe_battery(I)) {
            if (!cut_member(I, x)) continue;
            if (!cut_member(J, conj_mul(g, x)))
                throw Error("residual cross-check failed at " + to_string(g) + " * " + to_string(x));
        }
    }
}

}  // namespace

bool Window::contains(const Slot& s) const {
    switch (kind) {
        case LeZ: return s.level == Slot::Z;
        case LtY: return s.level == Slot::Z || s.pos < y;
        case LeY: return s.level == Slot::Z || s.pos <= y;
        case All: return true;
    }
    return true;
}

bool window_subset(const Window& a, const Window& b) { return window_key(a) <= window_key(b); }

Window window_intersect(const Window& a, const Window& b) {
    return window_key(a) <= window_key(b) ? a : b;
}

Window window_twist(const Window& w, const GroupAutomorphism& tau) {
    Window out = w;
    if (w.kind == Window::LtY || w.kind == Window::LeY) out.y -= tau.shift;
    return out;
}

Cut Cut::make(const ValueGroup& g, Window w, ValueVector boundary, bool strict) {
    Cut c{g, false, std::move(w), std::move(boundary), strict};
    canonicalize(c);
    return c;
}

Cut Cut::closed_at(const ValueGroup& g, ValueVector boundary) {
    return make(g, Window::all(), std::move(boundary), false);
}

Cut Cut::open_at(const ValueGroup& g, ValueVector boundary) {
    return make(g, Window::all(), std::move(boundary), true);
}

Cut Cut::ring(const ValueGroup& g, Window w) { return make(g, std::move(w), ValueVector{}, false); }

Cut Cut::whole_group(const ValueGroup& g) {
    Cut c{g, true, Window::all(), ValueVector{}, false};
    return c;
}

Cut v_ring(const ValueGroup& g) { return Cut::closed_at(g, ValueVector{}); }

void canonicalize(Cut& c) {
    if (c.whole) {
        c.win = Window::all();
        c.head = ValueVector{};
        c.strict = false;
        return;
    }
    validate_vector(c.group, c.head);
    normalize_line_window(c.group, c.win);

    ValueVector kept;
    for (const auto& [slot, val] : c.head.entries) {
        if (!c.win.contains(slot) || val.is_zero()) continue;
        kept.entries.emplace_back(slot, val);
    }
    c.head = std::move(kept);

    // Truncate just past the first boundary entry the group cannot attain.
    for (std::size_t i = 0; i < c.head.entries.size(); ++i) {
        const auto& [slot, val] = c.head.entries[i];
        if (c.group.attained(slot, val)) continue;
        c.win = window_intersect(c.win, le_of(slot));
        c.head.entries.resize(i + 1);
        c.strict = true;
        break;
    }
    normalize_line_window(c.group, c.win);

    // Over an integer lattice at the window's last slot, a strict cut is the
    // closed cut at the least element above its head.
    if (c.strict) {
        if (auto last = window_last_slot(c.group, c.win)) {
            if (c.group.lattice_at(*last) == SlotLattice::Integers) {
                PiLinear cur = c.head.at(*last);
                c.head.set(*last, PiLinear(Rational(floor_pilinear(cur) + 1)));
                c.strict = false;
            }
        }
    }
}

bool cut_equal(const Cut& a, const Cut& b) {
    check_same_group(a, b);
    if (a.whole || b.whole) return a.whole == b.whole;
    return a.win == b.win && a.strict == b.strict && a.head == b.head;
}

bool cut_member(const Cut& c, const ValueVector& x) {
    if (c.whole) return true;
    validate_vector(c.group, x);
    Ordering o = cmp_in_window(x, c.head, c.win);
    return o == Ordering::Greater || (o == Ordering::Equal && !c.strict);
}

bool cut_subset(const Cut& a, const Cut& b) {
    check_same_group(a, b);
    if (b.whole) return true;
    if (a.whole) return false;
    auto ka = window_key(a.win), kb = window_key(b.win);
    if (kb <= ka) {
        // b compares a prefix of what a compares.
        Ordering o = cmp_in_window(a.head, b.head, b.win);
        if (o == Ordering::Greater) return true;
        if (o == Ordering::Less) return false;
        if (!b.strict) return true;
        // Members of a can sit exactly on b's head unless a pins them
        // strictly above on the same window.
        return ka == kb && a.strict;
    }
    // b compares deeper than a's members are constrained: a must win
    // strictly inside its own window.
    Ordering o = cmp_in_window(a.head, b.head, a.win);
    if (o == Ordering::Greater) return true;
    if (o == Ordering::Less) return false;
    return a.strict;
}

Cut cut_sum(const Cut& a, const Cut& b) {
    check_same_group(a, b);
    if (a.whole || b.whole) return Cut::whole_group(a.group);
    GroupAutomorphism conj(a.z_part());
    Window wb = window_twist(b.win, conj);
    ValueVector hb = vec_twist(b.head, conj);
    Window w = window_intersect(a.win, wb);
    Cut out{a.group, false, w, restrict_to(a.head + hb, w), a.strict || b.strict};
    canonicalize(out);
    return out;
}

Cut cut_translate(const Cut& c, const ValueVector& gamma) {
    Cut pt{c.group, false, Window::all(), gamma, false};
    canonicalize(pt);
    return cut_sum(c, pt);
}

Cut translate_cut(const ValueVector& gamma, const Cut& c) {
    Cut pt{c.group, false, Window::all(), gamma, false};
    canonicalize(pt);
    return cut_sum(pt, c);
}

Cut cut_twist(const Cut& c, const GroupAutomorphism& tau) {
    if (c.whole || tau.is_identity()) return c;
    Cut out{c.group, false, window_twist(c.win, tau), vec_twist(c.head, tau), c.strict};
    canonicalize(out);
    return out;
}

Cut cut_closure(const Cut& c, const Cut& over) {
    if (c.whole) throw ValidationError("closure of the improper ideal");
    if (!cut_equal(over, o_left(c)))
        throw ValidationError("cut_closure requires over == o_left(c)");
    if (!c.strict) return c;
    if (!vec_attained(c.group, c.head)) return c;
    Cut out = c;
    out.strict = false;
    canonicalize(out);
    return out;
}

Cut o_left(const Cut& c) {
    if (c.whole) throw ValidationError("o_left of the improper ideal");
    Cut r = Cut::ring(c.group, c.win);
    cross_check_o_left(c, r);
    return r;
}

Cut residual_left(const Cut& J, const Cut& I) {
    check_same_group(J, I);
    if (I.whole) throw ValidationError("residual by the improper ideal");
    if (J.whole) return Cut::whole_group(J.group);
    GroupAutomorphism conj(J.z_part() - I.z_part());
    Window wi = window_twist(I.win, conj);
    ValueVector hi = vec_twist(I.head, conj);
    Window w = window_intersect(J.win, wi);
    ValueVector head = restrict_to(J.head - hi, w);

    bool i_min_attained = vec_attained(I.group, restrict_to(hi, w)) &&
                          (window_key(w) < window_key(wi) || !I.strict);
    bool strict_j_eff = (J.win == w) ? J.strict : true;
    bool strict = i_min_attained ? strict_j_eff : false;

    Cut out{J.group, false, w, std::move(head), strict};
    canonicalize(out);
    cross_check_residual(J, I, out);
    return out;
}

PrincipalityResult is_principal(const Cut& c, const Cut& over) {
    if (c.whole) throw ValidationError("principality of the improper ideal");
    if (!cut_equal(over, o_left(c)))
        throw ValidationError("is_principal requires over == o_left(c)");
    if (c.strict) return {false, std::nullopt};
    return {true, c.head};
}

Cut radical(const Cut& ring) {
    if (ring.whole) throw ValidationError("the improper ring has no Jacobson radical");
    if (!ring.head.is_zero() || ring.strict)
        throw ValidationError("radical expects a ring cut (zero head, closed)");
    Cut out = ring;
    out.strict = true;
    canonicalize(out);
    return out;
}

bool is_idempotent(const Cut& c) { return cut_equal(cut_sum(c, c), c); }

Cut complement_reflect(const Cut& c, const Rational& grade, const Rational& sigma_rate) {
    if (c.whole) throw ValidationError("complement of the improper ideal is empty");
    GroupAutomorphism tau(-grade * sigma_rate);   // sigma(-g)
    GroupAutomorphism conj(-c.z_part());          // undo the boundary's Z part
    Window w = window_twist(window_twist(c.win, tau), conj);
    ValueVector head = vec_twist(vec_twist(-c.head, tau), conj);
    Cut out{c.group, false, w, std::move(head), !c.strict};
    canonicalize(out);
    return out;
}

std::string to_string(const Cut& c) {
    if (c.whole) return "cut(K)";
    std::string head = c.head.is_zero() ? "0" : to_string(c.head);
    std::string s = c.strict ? "cut(> " : "cut(>= ";
    s += head;
    if (c.win.kind != Window::All) {
        s += ", tail: ";
        s += c.strict ? "+inf@" : "-inf@";
        if (c.win.kind == Window::LeZ) s += "z+";
        else {
            s += to_string(c.win.y);
            if (c.win.kind == Window::LeY) s += "+";
        }
    }
    return s + ")";
}

}  // namespace gve
