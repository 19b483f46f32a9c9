#pragma once

#include <string>

#include "gve/classify.hpp"
#include "gve/fixtures.hpp"

namespace gve {

// Deterministic serializations of classification verdicts and axiom
// reports. JSON fields: kind, letter, bound, witnesses, axioms{ii,iii},
// warnings/caveat when present.
std::string report_text(const TypeVerdict& v, const AxiomReport* axioms = nullptr);
std::string report_json(const TypeVerdict& v, const AxiomReport* axioms = nullptr);

std::string report_text(const AxiomReport& rep);
std::string report_json(const AxiomReport& rep);

std::string report_text(const std::vector<FixtureRow>& rows);
std::string report_json(const std::vector<FixtureRow>& rows);

}  // namespace gve
