#include "gve/report.hpp"

#include <json.hpp>

#include <sstream>

namespace gve {

namespace {

using nlohmann::json;

json axioms_json(const AxiomReport& rep) {
    json a;
    a["ii"] = rep.ok || rep.violation->axiom != 2 ? "pass" : rep.violation->detail;
    a["iii"] = rep.ok || rep.violation->axiom != 3 ? "pass" : rep.violation->detail;
    a["pairs_checked"] = rep.pairs_checked;
    return a;
}

json verdict_json(const TypeVerdict& v, const AxiomReport* axioms) {
    json j;
    j["kind"] = to_string(v.kind);
    j["letter"] = std::string(1, v.letter);
    j["bound"] = v.bound;
    j["witnesses"] = v.witnesses;
    if (!v.caveat.empty()) j["caveat"] = v.caveat;
    if (!v.warnings.empty()) j["warnings"] = v.warnings;
    if (axioms) j["axioms"] = axioms_json(*axioms);
    return j;
}

}  // namespace

std::string report_text(const TypeVerdict& v, const AxiomReport* axioms) {
    std::ostringstream out;
    out << "type (" << v.letter << "), kind " << to_string(v.kind);
    if (v.letter == 'g') out << " [bound " << v.bound << "]";
    out << "\n";
    if (!v.caveat.empty()) out << "  caveat: " << v.caveat << "\n";
    for (const std::string& w : v.witnesses) out << "  witness: " << w << "\n";
    for (const std::string& w : v.warnings) out << "  warning: " << w << "\n";
    if (axioms) out << "  " << axioms->text() << "\n";
    return out.str();
}

std::string report_json(const TypeVerdict& v, const AxiomReport* axioms) {
    return verdict_json(v, axioms).dump();
}

std::string report_text(const AxiomReport& rep) { return rep.text() + "\n"; }

std::string report_json(const AxiomReport& rep) {
    json j;
    j["ok"] = rep.ok;
    j["axioms"] = axioms_json(rep);
    if (!rep.ok) {
        j["violation"]["axiom"] = rep.violation->axiom;
        j["violation"]["g"] = to_string(rep.violation->g);
        j["violation"]["h"] = to_string(rep.violation->h);
        j["violation"]["detail"] = rep.violation->detail;
    }
    return j.dump();
}

std::string report_text(const std::vector<FixtureRow>& rows) {
    std::ostringstream out;
    int passed = 0;
    for (const FixtureRow& r : rows) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": expected (" << r.expected
            << "), got (" << r.got << ")";
        if (r.got == 'g') out << " up to bound " << r.bound;
        if (!r.pass && !r.note.empty()) out << " -- " << r.note;
        out << "\n";
        passed += r.pass;
    }
    out << passed << "/" << rows.size() << " examples match\n";
    return out.str();
}

std::string report_json(const std::vector<FixtureRow>& rows) {
    json arr = json::array();
    for (const FixtureRow& r : rows) {
        json j;
        j["name"] = r.name;
        j["expected"] = std::string(1, r.expected);
        j["got"] = std::string(1, r.got);
        j["pass"] = r.pass;
        if (r.got == 'g') j["bound"] = r.bound;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(j);
    }
    return arr.dump();
}

}  // namespace gve
