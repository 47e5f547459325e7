#pragma once

#include "chibind/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace chibind {

/// Malformed input; `line` is 1-based (0 when not applicable).
class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// DIMACS .col: "c" comments, one "p edge n m" header, "e u v" lines with 1-based vertices.
Graph read_dimacs(std::istream& in);
/// Emits the header and edges sorted lexicographically, 1-based.
void write_dimacs(std::ostream& out, const Graph& g);

/// {"n": int, "edges": [[u,v],...]} with 0-based vertices.
Graph read_json_graph(std::string_view text);
std::string write_json_graph(const Graph& g);

/// Dispatches on the first non-blank character: '{' selects JSON, anything else DIMACS.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

}  // namespace chibind
