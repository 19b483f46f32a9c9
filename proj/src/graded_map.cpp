#include "gve/graded_map.hpp"

#include <algorithm>

#include "gve/error.hpp"

namespace gve {

const char* to_string(MapFamily f) {
    switch (f) {
        case MapFamily::Fd: return "fd";
        case MapFamily::Fd1: return "fd1";
        case MapFamily::FdM1: return "fdm1";
    }
    return "?";
}

std::optional<MapFamily> parse_family(const std::string& name) {
    if (name == "fd") return MapFamily::Fd;
    if (name == "fd1") return MapFamily::Fd1;
    if (name == "fdm1") return MapFamily::FdM1;
    return std::nullopt;
}

Int eval(const GradedMap& f, const Rational& r) {
    if (r == Rational(0)) return 0;
    switch (f.family) {
        case MapFamily::Fd:
            return floor_mul(r, f.d);
        case MapFamily::Fd1: {
            if (r < Rational(0)) return -eval(f, -r) - 1;
            PiLinear p = f.d.scaled(r);
            if (p.is_rational() && is_integer(p.a)) return p.a.numerator() - 1;
            return floor_pilinear(p);
        }
        case MapFamily::FdM1:
            if (r < Rational(0)) return -eval(f, -r) - 1;
            return floor_mul(r, f.d);
    }
    return 0;
}

std::vector<Rational> farey_grid(int max_num, int max_den) {
    std::set<Rational> s;
    s.insert(Rational(0));
    for (int p = 1; p <= max_num; ++p)
        for (int q = 1; q <= max_den; ++q) {
            s.insert(rat(p, q));
            s.insert(rat(-p, q));
        }
    return {s.begin(), s.end()};
}

namespace {

MapCheckReport check_core(const std::function<std::optional<Int>(const Rational&)>& f,
                          const std::vector<Rational>& grid) {
    MapCheckReport rep;
    auto get = [&](const Rational& r) -> Int {
        auto v = f(r);
        if (!v) throw ValidationError("grid point " + to_string(r) + " outside the table domain");
        return *v;
    };
    if (get(Rational(0)) != 0) {
        rep.ok = false;
        rep.detail = "f(0) != 0";
        return rep;
    }
    std::set<Rational> in_grid(grid.begin(), grid.end());
    for (const Rational& s : grid) {
        if (!in_grid.count(-s)) throw ValidationError("grid not closed under negation");
        if (get(s) + get(-s) < -1) {
            rep.ok = false;
            rep.violating_pair = {s, -s};
            rep.detail = "f(s)+f(-s) < -1 at s = " + to_string(s);
            return rep;
        }
    }
    for (const Rational& s : grid)
        for (const Rational& t : grid) {
            if (t < s) continue;
            Rational sum = s + t;
            if (!in_grid.count(sum)) continue;
            if (get(s) + get(t) > get(sum)) {
                rep.ok = false;
                rep.violating_pair = {s, t};
                rep.detail = "superadditivity fails at (" + to_string(s) + ", " + to_string(t) + ")";
                return rep;
            }
        }
    return rep;
}

}  // namespace

MapCheckReport check_graded_map(const GradedMap& f, const std::vector<Rational>& grid) {
    return check_core([&](const Rational& r) { return std::optional<Int>(eval(f, r)); }, grid);
}

MapCheckReport check_graded_map(const GradedMapTable& t, const std::vector<Rational>& grid) {
    return check_core(
        [&](const Rational& r) -> std::optional<Int> {
            auto it = t.entries.find(r);
            if (it == t.entries.end()) return std::nullopt;
            return it->second;
        },
        grid);
}

bool is_nice_map(const GradedMap& f, const Rational& r, int multiples) {
    if (r <= Rational(0)) throw ValidationError("nice maps are defined for positive r");
    if (eval(f, r) != 0 || eval(f, -r) != -1) return false;
    std::vector<Rational> grid;
    for (int i = -multiples; i <= multiples; ++i) grid.push_back(r * Rational(i));
    return check_graded_map(f, grid).ok;
}

bool DInterval::contains(const PiLinear& d) const {
    if (lo.value) {
        PiLinear bound{*lo.value};
        Ordering o = pilinear_cmp(d, bound);
        if (o == Ordering::Less || (o == Ordering::Equal && lo.open)) return false;
    }
    if (hi.value) {
        PiLinear bound{*hi.value};
        Ordering o = pilinear_cmp(d, bound);
        if (o == Ordering::Greater || (o == Ordering::Equal && hi.open)) return false;
    }
    return true;
}

bool DInterval::empty() const {
    if (!lo.value || !hi.value) return false;
    if (*lo.value < *hi.value) return false;
    if (*lo.value > *hi.value) return true;
    return lo.open || hi.open;
}

namespace {

// Constraint interval on d from a single (grade, value) entry.
std::optional<DInterval> entry_interval(MapFamily fam, const Rational& g, const Int& v) {
    if (g == Rational(0)) {
        if (v != 0) return DInterval{{Rational(0), false}, {Rational(0), true}};  // empty
        return DInterval{};                                                       // everything
    }
    Rational vq(v), v1(v + 1);
    bool pos = g > Rational(0);
    switch (fam) {
        case MapFamily::Fd:
            // floor(g d) = v
            if (pos) return DInterval{{vq / g, false}, {v1 / g, true}};
            return DInterval{{v1 / g, true}, {vq / g, false}};
        case MapFamily::Fd1:
            // g > 0: v < g d <= v+1; reflected for g < 0
            if (pos) return DInterval{{vq / g, true}, {v1 / g, false}};
            return DInterval{{v1 / g, true}, {vq / g, false}};
        case MapFamily::FdM1:
            if (pos) return DInterval{{vq / g, false}, {v1 / g, true}};
            return DInterval{{v1 / g, false}, {vq / g, true}};
    }
    return std::nullopt;
}

DInterval intersect(const DInterval& a, const DInterval& b) {
    DInterval out = a;
    if (b.lo.value) {
        if (!out.lo.value || *b.lo.value > *out.lo.value ||
            (*b.lo.value == *out.lo.value && b.lo.open))
            out.lo = b.lo;
    }
    if (b.hi.value) {
        if (!out.hi.value || *b.hi.value < *out.hi.value ||
            (*b.hi.value == *out.hi.value && b.hi.open))
            out.hi = b.hi;
    }
    return out;
}

}  // namespace

std::vector<FamilyCandidate> classify_table(const GradedMapTable& t) {
    auto zero = t.entries.find(Rational(0));
    if (zero == t.entries.end() || zero->second != 0)
        throw ValidationError("graded-map tables must contain 0 -> 0");
    for (const auto& [r, v] : t.entries)
        if (!t.entries.count(-r)) throw ValidationError("table domain not closed under negation");

    std::vector<FamilyCandidate> out;
    for (MapFamily fam : {MapFamily::Fd, MapFamily::Fd1, MapFamily::FdM1}) {
        DInterval acc;
        bool dead = false;
        for (const auto& [g, v] : t.entries) {
            auto iv = entry_interval(fam, g, v);
            if (!iv) {
                dead = true;
                break;
            }
            acc = intersect(acc, *iv);
            if (acc.empty()) {
                dead = true;
                break;
            }
        }
        if (!dead) out.push_back({fam, acc});
    }
    return out;
}

std::optional<Rational> smallest_sum_zero(const GradedMap& f) {
    if (f.is_zero_map()) throw ValidationError("smallest_sum_zero of the zero map");
    if (f.family != MapFamily::Fd) return std::nullopt;  // sum is -1 at every r != 0
    if (!f.d.is_rational()) return std::nullopt;         // r d is never integral
    // Least positive r with r d integral, d = p/q in lowest terms: r = q/|p|.
    Rational d = f.d.a;
    return Rational(d.denominator(), boost::multiprecision::abs(d.numerator()));
}

MapCheckReport iterate_growth_check(const GradedMap& f, const Rational& r, int N) {
    if (r <= Rational(0) || N < 1) throw ValidationError("iterate_growth_check needs r > 0, N >= 1");
    MapCheckReport rep;
    Int fr = eval(f, r);
    for (int n = 1; n <= N; ++n) {
        if (!(eval(f, r * Rational(n)) < Int(n) * (fr + 1))) {
            rep.ok = false;
            rep.detail = "growth bound fails at n = " + std::to_string(n);
            rep.violating_pair = {r * Rational(n), r};
            return rep;
        }
    }
    return rep;
}

MapCheckReport period_additivity_check(const GradedMap& f, const Rational& k,
                                       const std::vector<Rational>& grid) {
    auto k0 = smallest_sum_zero(f);
    if (!k0 || !is_integer(k / *k0))
        throw ValidationError("period_additivity_check: k is not a multiple of the zero-sum period");
    MapCheckReport rep;
    Int fk = eval(f, k), fmk = eval(f, -k);
    for (const Rational& s : grid) {
        if (eval(f, s + k) != eval(f, s) + fk || eval(f, s - k) != eval(f, s) + fmk) {
            rep.ok = false;
            rep.detail = "translation additivity fails at s = " + to_string(s);
            rep.violating_pair = {s, k};
            return rep;
        }
    }
    return rep;
}

std::string to_string(const GradedMap& f) {
    return std::string(to_string(f.family)) + "(" + to_string(f.d) + ")";
}

}  // namespace gve
