#include "chibind/report.hpp"

namespace chibind {

using nlohmann::json;

json certificate_json(const ColorResult& result) {
    const auto& c = result.certificate;
    json classes = json::array();
    for (const auto& s : c.class_spec) classes.push_back(to_string(s));
    json out = {
        {"theorem", c.theorem_id},
        {"class", classes},
        {"omega", c.omega},
        {"p", c.p},
        {"bound", c.claimed_bound},
        {"colors_used", c.colors_used},
        {"precondition_met", c.precondition_met},
        {"branch", c.branch},
        {"coloring", result.coloring.colors},
    };
    if (c.lower_bound) out["lower_bound"] = *c.lower_bound;
    return out;
}

json partition_json(const WagonPartition& part) {
    json out = {{"A", part.clique}, {"I", json::object()}, {"C", json::object()}};
    for (int k = 1; k <= part.omega(); ++k)
        if (!part.I(k).empty()) out["I"][std::to_string(k)] = part.I(k).to_vector();
    for (auto [i, j] : part.pairs())
        if (!part.C(i, j).empty()) out["C"][std::to_string(i) + "," + std::to_string(j)] = part.C(i, j).to_vector();
    return out;
}

json occurrence_json(const Occurrence& occ) { return {{"pattern", to_string(occ.pattern)}, {"vertices", occ.vertices}}; }

json oracle_json(const OracleResult& result) {
    json out = {
        {"status", result.exact() ? "exact" : "indeterminate"},
        {"value", result.value},
        {"nodes", result.nodes_explored},
    };
    if (!result.exact()) out["lower_bound"] = result.lower_bound;
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "fail";
}

Verdict Report::verdict() const {
    if (!failures.empty()) return Verdict::fail;
    return incomplete ? Verdict::indeterminate : Verdict::pass;
}

json Report::to_json() const {
    return {
        {"schema", report_schema},
        {"command", command},
        {"input", input},
        {"checks", checks},
        {"failures", failures},
        {"verdict", to_string(verdict())},
    };
}

}  // namespace chibind
