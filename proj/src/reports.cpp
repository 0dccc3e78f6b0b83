#include "secproj/reports.hpp"

#include <fstream>

#include <json.hpp>

namespace secproj {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json ideal_to_json(const Ideal& I) {
    ordered_json out = ordered_json::array();
    for (const auto& g : I.gens()) out.push_back(g.str());
    return out;
}

}  // namespace

std::string verification_to_json(const VerificationReport& rep, bool emit_ideals) {
    ordered_json j;
    j["variety"] = rep.variety;
    j["center"] = rep.center;
    j["s"] = rep.s;
    j["verdict"] = rep.verdict;
    j["checks"] = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["predicted"] = c.predicted;
        cj["computed"] = c.computed;
        cj["pass"] = c.pass;
        j["checks"].push_back(cj);
    }
    if (emit_ideals) {
        if (rep.projected_ideal) j["projected_ideal"] = ideal_to_json(*rep.projected_ideal);
        if (rep.sigma_conductor) j["secant_ideal_conductor"] = ideal_to_json(*rep.sigma_conductor);
        if (rep.sigma_incidence) j["secant_ideal_incidence"] = ideal_to_json(*rep.sigma_incidence);
    }
    return j.dump(2) + "\n";
}

std::string stratification_to_json(const StratificationReport& rep) {
    ordered_json j;
    j["variety"] = rep.variety;
    j["field"] = rep.field;
    j["trials"] = rep.trials;
    j["special_trials"] = rep.special_trials;
    j["seed"] = rep.seed;
    ordered_json hist;
    for (const auto& [s, count] : rep.histogram) hist[std::to_string(s)] = count;
    j["histogram"] = hist;
    j["on_variety"] = rep.on_variety;
    j["inconsistent"] = rep.inconsistent;
    j["expected"] = ordered_json::array();
    for (int s : rep.expected) j["expected"].push_back(s);
    j["lemma41_checked"] = rep.lemma41_checked;
    j["lemma41_failures"] = rep.lemma41_failures;
    j["verdict"] = rep.verdict;
    if (!rep.caveat.empty()) j["caveat"] = rep.caveat;
    return j.dump(2) + "\n";
}

std::string betti_to_json(const BettiTable& t) {
    ordered_json j;
    j["complete"] = t.complete;
    j["jmax"] = t.jmax;
    ordered_json entries = ordered_json::array();
    for (const auto& [ij, b] : t.beta) {
        if (!b) continue;
        ordered_json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["beta"] = b;
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

}  // namespace secproj
