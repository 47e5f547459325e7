#pragma once

#include "chibind/colorers.hpp"
#include "chibind/decompose.hpp"
#include "chibind/oracles.hpp"
#include "chibind/patterns.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace chibind {

inline constexpr const char* report_schema = "1";

/// {"theorem", "omega", "p", "bound", "colors_used", "precondition_met", "coloring"}
/// plus "class", "branch" and, when known, "lower_bound".
nlohmann::json certificate_json(const ColorResult& result);
/// {"A": [...], "I": {"k": [...]}, "C": {"i,j": [...]}}, 0-based vertex ids, empty parts omitted.
nlohmann::json partition_json(const WagonPartition& part);
/// {"pattern": name, "vertices": [...]}; vertices[r] hosts role r of the pattern.
nlohmann::json occurrence_json(const Occurrence& occ);
nlohmann::json oracle_json(const OracleResult& result);

enum class Verdict { pass, fail, indeterminate };
std::string to_string(Verdict v);

/// Outcome of one CLI invocation. The verdict is fail iff some check failed, and
/// indeterminate when nothing failed but an oracle ran out of budget.
struct Report {
    Report() = default;
    Report(std::string cmd, std::string in) : command(std::move(cmd)), input(std::move(in)) {}

    std::string command;
    std::string input;
    nlohmann::json checks = nlohmann::json::object();
    std::vector<std::string> failures;
    bool incomplete = false;

    void fail(std::string why) { failures.push_back(std::move(why)); }
    Verdict verdict() const;
    nlohmann::json to_json() const;
};

}  // namespace chibind
