#pragma once

#include <string>
#include <vector>

#include "gve/classify.hpp"

namespace gve {

// Built-in example families with their known classifications.
struct Fixture {
    std::string name;
    GradedFamily family;
    char expected = 'a';
};

const std::vector<std::string>& fixture_names();

Fixture make_fixture(const std::string& name);

struct FixtureRow {
    std::string name;
    char expected = '?';
    char got = '?';
    bool pass = false;
    int bound = 0;
    std::string note;
};

// Classifies every built-in example against its expected letter. Failures
// become rows, not exceptions.
std::vector<FixtureRow> run_all(int bound = 16);

}  // namespace gve
