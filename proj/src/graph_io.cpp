#include "chibind/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace chibind {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    int header_line = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw FormatError(lineno, "second problem line (first at line " + std::to_string(header_line) + ")");
            std::string kind;
            long long nn = -1, m = -1;
            if (!(ls >> kind >> nn >> m) || (kind != "edge" && kind != "col"))
                throw FormatError(lineno, "expected 'p edge <n> <m>'");
            if (nn < 0 || m < 0 || nn > 1'000'000) throw FormatError(lineno, "bad vertex or edge count");
            n = static_cast<int>(nn);
            header_line = lineno;
        } else if (tag == "e") {
            if (n < 0) throw FormatError(lineno, "edge before the 'p edge' header");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw FormatError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n)
                throw FormatError(lineno, "endpoint outside 1.." + std::to_string(n));
            if (u == v) throw FormatError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw FormatError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw FormatError(0, "missing 'p edge' header");
    return Graph::from_edges(n, edges);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_json_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(0, std::string("JSON parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw FormatError(0, "JSON graph needs an integer field \"n\"");
    const auto n = j["n"].get<long long>();
    if (n < 0 || n > 1'000'000) throw FormatError(0, "bad vertex count");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw FormatError(0, "\"edges\" must be an array");
        std::size_t idx = 0;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw FormatError(0, "edges[" + std::to_string(idx) + "] must be a pair of integers");
            auto u = e[0].get<long long>(), v = e[1].get<long long>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw FormatError(0, "edges[" + std::to_string(idx) + "] endpoint outside 0.." + std::to_string(n - 1));
            if (u == v) throw FormatError(0, "edges[" + std::to_string(idx) + "] is a self-loop");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            ++idx;
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_json_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph parse_graph(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return read_json_graph(text);
    std::istringstream in{std::string(text)};
    return read_dimacs(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace chibind
