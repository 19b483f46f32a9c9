#pragma once

#include <map>
#include <string>

#include "gve/family.hpp"
#include "gve/fixtures.hpp"
#include "gve/gen_poly.hpp"

namespace gve {

// One instance file: a value group, declarations, and a graded family.
struct InstanceDoc {
    ValueGroup group;
    SigmaAction sigma;
    std::map<std::string, Cut> rings;  // named ring cuts; V is implicit
    std::optional<Rational> subgroup_h0;
    bool subgroup_full = false;  // "subgroup H = Q" was written (rejected downstream)
    std::optional<Rational> designated_t;
    std::optional<char> expected;
    std::optional<int> expected_bound;
    std::string family_name = "A";
    GradedFamily family;
};

// Parses a .gve instance. Errors carry 1-based line/column.
InstanceDoc parse_instance(const std::string& text);

// Canonical text form; parse_instance(print_instance(d)) reproduces d.
std::string print_instance(const InstanceDoc& doc);

// Instance document for a built-in example.
InstanceDoc fixture_doc(const std::string& name);

// Generalized-polynomial element syntax, for feeding the valuation oracle:
//   3*Y^(1/2) + Y^(3)            single-slot groups
//   Y[0]^(pi) * Y[1]^(-5)        lex groups, bracketed slot index
//   1/2 * Z^(2) * Y[0]^(-pi)     Z exponent marker
GenPoly parse_gen_poly(const std::string& text);

std::string to_string(const GenPoly& p);

}  // namespace gve
