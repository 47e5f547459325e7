#include "chibind/cli.hpp"

#include "chibind/atlas.hpp"
#include "chibind/colorers.hpp"
#include "chibind/decompose.hpp"
#include "chibind/graph_io.hpp"
#include "chibind/oracles.hpp"
#include "chibind/patterns.hpp"
#include "chibind/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>

namespace chibind::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_budget(const std::string& text, const std::string& source) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        text.size() > 19)
        throw UsageError(source + " must be a positive integer, got '" + text + "'");
    const auto value = std::stoull(text);
    if (value == 0) throw UsageError(source + " must be positive");
    return value;
}

std::uint64_t env_budget() {
    const char* raw = std::getenv("CHIBIND_BUDGET");
    if (raw == nullptr) return default_node_budget;
    return parse_budget(raw, "CHIBIND_BUDGET");
}

Graph read_input(const std::string& path) {
    try {
        return load_graph(path);
    } catch (const FormatError& e) {
        throw FormatError(e.line(), path + ": " + e.what());
    }
}

int exit_for(const Report& r) {
    switch (r.verdict()) {
    case Verdict::pass: return exit_pass;
    case Verdict::fail: return exit_fail;
    case Verdict::indeterminate: return exit_indeterminate;
    }
    return exit_fail;
}

int emit(const Report& r, std::ostream& out) {
    out << r.to_json().dump(2) << "\n";
    return exit_for(r);
}

Report recognize(const std::string& path, const std::string& patterns) {
    const Graph g = read_input(path);
    Report r{"recognize", path};
    json results = json::array();
    for (const auto& spec : parse_pattern_list(patterns)) {
        const auto occ = find_induced(g, spec);
        json entry = {{"pattern", to_string(spec)}, {"free", !occ}};
        if (occ) {
            entry["witness"] = occurrence_json(*occ);
            r.fail("graph contains an induced " + to_string(spec));
        }
        results.push_back(entry);
    }
    r.checks["order"] = g.order();
    r.checks["patterns"] = results;
    return r;
}

Report partition(const std::string& path) {
    const Graph g = read_input(path);
    Report r{"partition", path};
    if (g.order() == 0) throw UsageError("partition needs a graph with at least one vertex");
    const auto part = wagon_partition(g);
    r.checks["omega"] = part.omega();
    r.checks["partition"] = partition_json(part);
    const auto violations = partition_violations(g, part);
    r.checks["violations"] = violations;
    for (const auto& v : violations) r.fail(v);
    return r;
}

// Shared colouring checks; returns false if the colourer refused.
bool run_colorer(Report& r, const Graph& g, const std::function<ColorResult()>& colorer, ColorResult& result) {
    try {
        result = colorer();
    } catch (const PreconditionError& e) {
        json refusal = {{"check", e.check()}};
        if (e.witness()) refusal["witness"] = occurrence_json(*e.witness());
        r.checks["precondition"] = refusal;
        r.fail(e.what());
        return false;
    }
    r.checks["certificate"] = certificate_json(result);
    const bool proper = is_proper(g, result.coloring);
    r.checks["proper"] = proper;
    if (!proper) r.fail("colouring is not proper");
    const auto& c = result.certificate;
    if (c.precondition_met && c.colors_used > c.claimed_bound)
        r.fail("used " + std::to_string(c.colors_used) + " colours, bound is " + std::to_string(c.claimed_bound));
    return true;
}

Report color(const std::string& path, const std::string& theorem) {
    const Graph g = read_input(path);
    Report r{"color", path};
    ColorResult result;
    try {
        run_colorer(r, g, [&] { return color_with(g, theorem); }, result);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return r;
}

Report chi(const std::string& path, std::uint64_t budget) {
    const Graph g = read_input(path);
    Report r{"chi", path};
    const auto x = chromatic_number(g, budget);
    r.checks["chi"] = oracle_json(x);
    r.checks["omega"] = clique_number(g).value;
    r.checks["coloring"] = x.witness;
    r.incomplete = !x.exact();
    return r;
}

// Maps a class to the colourer whose theorem covers it.
std::function<ColorResult()> colorer_for(const Graph& g, const std::vector<PatternSpec>& specs, int omega) {
    std::vector<PatternSpec> extra;
    bool has_p3p2 = false;
    for (const auto& s : specs) {
        if (s.kind == PatternKind::P3UnionP2) has_p3p2 = true;
        else if (std::find(extra.begin(), extra.end(), s) == extra.end()) extra.push_back(s);
    }
    if (!has_p3p2 || extra.size() != 1) return [&g] { return auto_color(g); };
    const PatternSpec s = extra.front();
    switch (s.kind) {
    case PatternKind::Hvn:
        if (omega >= 4) return [&g] { return color_hvn(g); };
        break;
    case PatternKind::Diamond: return [&g] { return color_diamond(g); };
    case PatternKind::K1K2PlusKp:
        if (*s.p >= 2 && omega >= 3) return [&g, p = *s.p] { return color_k1k2kp_any(g, p); };
        if (*s.p == 1 && omega >= 3) return [&g] { return color_k1k2kp(g, 1); };
        break;
    case PatternKind::TwoK1PlusKp:
        if (*s.p >= 2) return [&g, p = *s.p] { return color_2k1kp(g, p); };
        break;
    default: break;
    }
    return [&g] { return color_general_p3p2(g); };
}

bool claims_perfect(const BoundCertificate& c) {
    if (c.theorem_id == "2k1kp") return c.branch == "omega>=3p-1";
    if (c.theorem_id == "diamond") return c.branch == "omega>=5";
    return false;
}

Report verify_one(const std::string& path, const std::vector<PatternSpec>& specs, std::uint64_t budget) {
    const Graph g = read_input(path);
    Report r{"verify", path};
    json classes = json::array();
    for (const auto& s : specs) classes.push_back(to_string(s));
    r.checks["class"] = classes;
    if (auto occ = first_occurrence(g, specs)) {
        r.checks["membership"] = {{"member", false}, {"witness", occurrence_json(*occ)}};
        r.fail("graph is not in the class: contains an induced " + to_string(occ->pattern));
        return r;
    }
    r.checks["membership"] = {{"member", true}};

    const int omega = clique_number(g).value;
    ColorResult result;
    if (!run_colorer(r, g, colorer_for(g, specs, omega), result)) return r;
    const auto& c = result.certificate;

    const auto x = chromatic_number(g, budget);
    r.checks["oracle"] = {{"chi", oracle_json(x)}, {"omega", omega}};
    if (omega != c.omega) r.fail("certificate ω " + std::to_string(c.omega) + " differs from oracle ω " + std::to_string(omega));
    if (x.exact()) {
        if (x.value > c.colors_used) r.fail("oracle χ exceeds the colours used");
    } else {
        r.incomplete = true;
    }
    if (claims_perfect(c)) {
        const auto hole = odd_hole_or_antihole(g);
        r.checks["perfect"] = {{"odd_hole_or_antihole", hole ? occurrence_json(*hole) : json(nullptr)}};
        if (hole) r.fail("perfect class but found an odd hole or antihole");
        if (x.exact() && x.value != omega) r.fail("perfect class but χ ≠ ω");
    }
    return r;
}

Report verify(const std::string& target, const std::string& class_text, bool dir, std::uint64_t budget) {
    const auto specs = parse_pattern_list(class_text);
    if (!dir) return verify_one(target, specs, budget);

    if (!fs::is_directory(target)) throw UsageError(target + " is not a directory");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(target)) {
        const auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".col" || ext == ".json")) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    Report all{"verify", target};
    json per_file = json::array();
    for (const auto& f : files) {
        Report one;
        try {
            one = verify_one(f, specs, budget);
        } catch (const std::exception& e) {
            one = Report{"verify", f};
            one.fail(std::string("input error: ") + e.what());
        }
        for (const auto& why : one.failures) all.fail(f + ": " + why);
        all.incomplete = all.incomplete || one.incomplete;
        per_file.push_back(one.to_json());
    }
    all.checks["files"] = per_file;
    return all;
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "json") out << write_json_graph(g) << "\n";
    else write_dimacs(out, g);
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chibind: χ-binding colourings for (P3 ∪ P2)-free graph classes"};
    app.require_subcommand(1);

    std::string file, pattern, theorem = "auto", class_text, budget_text, format = "dimacs", free_text;
    bool dir = false;
    int omega = 0, p = 0, n = 0;
    std::uint64_t seed = 0;
    std::optional<int> sample_omega;

    auto* rec = app.add_subcommand("recognize", "Search for induced copies of patterns");
    rec->add_option("file", file, "Graph file (DIMACS or JSON)")->required();
    rec->add_option("--pattern", pattern, "Comma-separated pattern list, e.g. p3p2,diamond")->required();

    auto* part = app.add_subcommand("partition", "Print the partition around a maximum clique");
    part->add_option("file", file)->required();

    auto* col = app.add_subcommand("color", "Colour with a theorem and emit its certificate");
    col->add_option("file", file)->required();
    col->add_option("--theorem", theorem, "auto|general|k1k2kp:<p>|k1k2kp-any:<p>|hvn|2k1kp:<p>|diamond");

    auto* ch = app.add_subcommand("chi", "Exact chromatic number");
    ch->add_option("file", file)->required();
    ch->add_option("--budget", budget_text, "Search node budget");

    auto* ver = app.add_subcommand("verify", "Colour, run the oracles, cross-check");
    ver->add_option("file", file, "Graph file, or directory with --dir")->required();
    ver->add_option("--class", class_text, "Forbidden patterns, e.g. p3p2,hvn")->required();
    ver->add_flag("--dir", dir, "Check every .col/.json file in the directory");
    ver->add_option("--budget", budget_text, "Search node budget");

    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->require_subcommand(1);
    auto* gstar = gen->add_subcommand("g-star", "G*(ω, p)");
    gstar->add_option("--omega", omega)->required();
    gstar->add_option("--p", p)->required();
    auto* grot = gen->add_subcommand("grotzsch", "Mycielskian of C5");
    auto* sch = gen->add_subcommand("schlafli-complement", "Complement of the Schläfli graph");
    auto* sample = gen->add_subcommand("sample", "Seeded random graph free of the given patterns");
    sample->add_option("--free", free_text)->required();
    sample->add_option("--n", n)->required();
    sample->add_option("--omega", sample_omega);
    sample->add_option("--seed", seed)->required();
    for (auto* sub : {gstar, grot, sch, sample})
        sub->add_option("--format", format, "dimacs|json")->check(CLI::IsMember({"dimacs", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        const std::uint64_t budget = budget_text.empty() ? env_budget() : parse_budget(budget_text, "--budget");
        if (rec->parsed()) return emit(recognize(file, pattern), out);
        if (part->parsed()) return emit(partition(file), out);
        if (col->parsed()) return emit(color(file, theorem), out);
        if (ch->parsed()) return emit(chi(file, budget), out);
        if (ver->parsed()) return emit(verify(file, class_text, dir, budget), out);
        if (gstar->parsed()) write_graph(out, g_star(omega, p).graph, format);
        else if (grot->parsed()) write_graph(out, grotzsch().graph, format);
        else if (sch->parsed()) write_graph(out, schlafli_complement().graph, format);
        else if (sample->parsed())
            write_graph(out, sample_free(parse_pattern_list(free_text), n, sample_omega, seed), format);
        return exit_pass;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const PatternError& e) {
        err << "pattern error: " << e.what() << "\n";
    } catch (const AtlasError& e) {
        err << "generator error: " << e.what() << "\n";
    } catch (const SamplerError& e) {
        err << "sampler error: " << e.what() << "\n";
    } catch (const GraphError& e) {
        err << "graph error: " << e.what() << "\n";
    }
    return exit_usage;
}

}  // namespace chibind::cli
