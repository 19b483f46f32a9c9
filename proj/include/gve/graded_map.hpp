#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gve/pilinear.hpp"

namespace gve {

// The three families of graded maps Q -> Z with parameter d:
//   fd(r)   = floor(r d)
//   fd1(r)  = the integer in [r d - 1, r d) for r > 0, reflected below zero
//   fdm1(r) = floor(r d) for r > 0, reflected below zero
// where "reflected" means f(-r) = -f(r) - 1.
enum class MapFamily { Fd, Fd1, FdM1 };

const char* to_string(MapFamily f);
std::optional<MapFamily> parse_family(const std::string& name);

struct GradedMap {
    MapFamily family = MapFamily::Fd;
    PiLinear d;

    bool is_zero_map() const { return family == MapFamily::Fd && d.is_zero(); }
};

Int eval(const GradedMap& f, const Rational& r);

// Finite table of grade -> value pairs; 0 -> 0 and a negation-closed domain.
struct GradedMapTable {
    std::map<Rational, Int> entries;
};

struct MapCheckReport {
    bool ok = true;
    std::string detail;
    std::optional<std::pair<Rational, Rational>> violating_pair;
};

// {p/q : |p| <= max_num, 1 <= q <= max_den}, deduplicated, with 0.
std::vector<Rational> farey_grid(int max_num, int max_den);

// Verifies f(0)=0, superadditivity on in-grid pairs with in-grid sums, and
// f(s)+f(-s) >= -1. The grid must be closed under negation.
MapCheckReport check_graded_map(const GradedMap& f, const std::vector<Rational>& grid);
MapCheckReport check_graded_map(const GradedMapTable& t, const std::vector<Rational>& grid);

// f restricted to Zr has f(r) = 0 and f(-r) = -1 (and stays a graded map).
bool is_nice_map(const GradedMap& f, const Rational& r, int multiples = 8);

// One endpoint of a parameter interval; no value means unbounded.
struct DBound {
    std::optional<Rational> value;
    bool open = true;
};

struct DInterval {
    DBound lo;
    DBound hi;
    bool contains(const PiLinear& d) const;
    bool empty() const;
};

struct FamilyCandidate {
    MapFamily family;
    DInterval d;
};

// Every (family, parameter interval) consistent with all table entries.
// Empty result: the table is not the restriction of any family member.
std::vector<FamilyCandidate> classify_table(const GradedMapTable& t);

// Least positive k with f(k) + f(-k) = 0; absent when the sum is always -1.
std::optional<Rational> smallest_sum_zero(const GradedMap& f);

// f(n r) < n (f(r) + 1) for n = 1..N.
MapCheckReport iterate_growth_check(const GradedMap& f, const Rational& r, int N);

// When k is a multiple of smallest_sum_zero(f), f translates additively by
// k: f(s + k) = f(s) + f(k) and f(s - k) = f(s) + f(-k) over the grid.
MapCheckReport period_additivity_check(const GradedMap& f, const Rational& k,
                                       const std::vector<Rational>& grid);

std::string to_string(const GradedMap& f);

}  // namespace gve
