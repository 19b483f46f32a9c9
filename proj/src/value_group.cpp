#include "gve/value_group.hpp"

#include <algorithm>

namespace gve {

std::string to_string(const Slot& s) {
    if (s.level == Slot::Z) return "z";
    return to_string(s.pos);
}

ValueGroup ValueGroup::rational_line(bool discrete) {
    ValueGroup g;
    g.kind = GroupKind::RationalLine;
    g.line_lattice = discrete ? SlotLattice::Integers : SlotLattice::Rationals;
    return g;
}

ValueGroup ValueGroup::pi_line(Rational pi_step) {
    ValueGroup g;
    g.kind = GroupKind::PiLine;
    g.line_lattice = SlotLattice::RationalsPlusPi;
    g.pi_step = std::move(pi_step);
    return g;
}

ValueGroup ValueGroup::lex(Rational pi_step) {
    ValueGroup g;
    g.kind = GroupKind::LexVector;
    g.pi_step = std::move(pi_step);
    return g;
}

SlotLattice ValueGroup::lattice_at(const Slot& s) const {
    if (is_line()) return line_lattice;
    if (s.level == Slot::Z) return SlotLattice::Rationals;
    auto it = y_overrides.find(s.pos);
    return it == y_overrides.end() ? y_default : it->second;
}

bool ValueGroup::attained(const Slot& s, const PiLinear& v) const {
    switch (lattice_at(s)) {
        case SlotLattice::Integers:
            return v.is_rational() && is_integer(v.a);
        case SlotLattice::Rationals:
            return v.is_rational();
        case SlotLattice::RationalsPlusPi: {
            if (v.b == Rational(0)) return true;
            if (pi_step == Rational(0)) return false;
            return is_integer(v.b / pi_step);
        }
    }
    return false;
}

ValueVector ValueVector::single(Slot s, PiLinear v) {
    ValueVector out;
    if (!v.is_zero()) out.entries.emplace_back(std::move(s), std::move(v));
    return out;
}

PiLinear ValueVector::at(const Slot& s) const {
    for (const auto& [slot, val] : entries)
        if (slot == s) return val;
    return PiLinear();
}

void ValueVector::set(const Slot& s, const PiLinear& v) {
    auto it = std::lower_bound(entries.begin(), entries.end(), s,
                               [](const auto& e, const Slot& k) { return e.first < k; });
    if (it != entries.end() && it->first == s) {
        if (v.is_zero()) entries.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        entries.insert(it, {s, v});
    }
}

Rational ValueVector::z_part() const {
    if (!entries.empty() && entries.front().first.level == Slot::Z) {
        const PiLinear& v = entries.front().second;
        return v.a;  // Z entries are validated rational
    }
    return Rational(0);
}

ValueVector ValueVector::operator+(const ValueVector& o) const {
    ValueVector out;
    auto a = entries.begin(), b = o.entries.begin();
    while (a != entries.end() || b != o.entries.end()) {
        if (b == o.entries.end() || (a != entries.end() && a->first < b->first)) {
            out.entries.push_back(*a++);
        } else if (a == entries.end() || b->first < a->first) {
            out.entries.push_back(*b++);
        } else {
            PiLinear s = a->second + b->second;
            if (!s.is_zero()) out.entries.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    return out;
}

ValueVector ValueVector::operator-() const {
    ValueVector out = *this;
    for (auto& [slot, val] : out.entries) val = -val;
    return out;
}

ValueVector ValueVector::scaled(const Rational& r) const {
    ValueVector out;
    if (r == Rational(0)) return out;
    out = *this;
    for (auto& [slot, val] : out.entries) val = val.scaled(r);
    return out;
}

Ordering vec_cmp(const ValueVector& a, const ValueVector& b) {
    auto ia = a.entries.begin(), ib = b.entries.begin();
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
    }
    return Ordering::Equal;
}

ValueVector vec_twist(const ValueVector& v, const GroupAutomorphism& tau) {
    if (tau.is_identity()) return v;
    ValueVector out;
    for (const auto& [slot, val] : v.entries) {
        Slot s = slot;
        if (s.level == Slot::Y) s.pos -= tau.shift;
        out.entries.emplace_back(s, val);
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

bool vec_attained(const ValueGroup& g, const ValueVector& v) {
    for (const auto& [slot, val] : v.entries)
        if (!g.attained(slot, val)) return false;
    return true;
}

void validate_vector(const ValueGroup& g, const ValueVector& v) {
    for (const auto& [slot, val] : v.entries) {
        if (g.is_line() && !(slot == Slot::y(Rational(0))))
            throw ValidationError("line value groups have a single slot");
        if (slot.level == Slot::Z && !val.is_rational())
            throw ValidationError("Z-slot entries must be rational");
    }
}

std::string to_string(const ValueVector& v) {
    if (v.entries.empty()) return "0";
    if (v.entries.size() == 1 && v.entries[0].first == Slot::y(Rational(0)))
        return to_string(v.entries[0].second);
    std::string out = "vec{";
    bool first = true;
    for (const auto& [slot, val] : v.entries) {
        if (!first) out += ", ";
        first = false;
        out += to_string(slot) + ": " + to_string(val);
    }
    return out + "}";
}

}  // namespace gve
