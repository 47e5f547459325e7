#pragma once

#include "chibind/graph.hpp"

#include <cstdint>
#include <vector>

namespace chibind {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

enum class OracleStatus { exact, indeterminate };

/// Exact value with a certifying witness. For chromatic_number the witness is a colouring
/// (colour of each vertex, 1-based); for clique/independence it is the vertex list.
struct OracleResult {
    OracleStatus status = OracleStatus::exact;
    int value = 0;
    /// Proven lower bound; equals value when exact. For chromatic_number it is
    /// max(ω, ⌈n/α⌉) while the search is incomplete.
    int lower_bound = 0;
    std::vector<int> witness;
    std::uint64_t nodes_explored = 0;

    bool exact() const { return status == OracleStatus::exact; }
};

/// DSATUR branch and bound seeded with a maximum clique (lower bound) and a DSATUR
/// greedy colouring (upper bound). When the node budget runs out the result is
/// `indeterminate` and `value` holds the best colouring found so far, never a claim.
OracleResult chromatic_number(const Graph& g, std::uint64_t node_budget = default_node_budget);

/// Branch and bound with a greedy colouring bound.
OracleResult clique_number(const Graph& g);
OracleResult independence_number(const Graph& g);

/// Largest clique inside `within`; the lexicographically least one (as a sorted list)
/// among all maximum cliques.
std::vector<int> lex_least_maximum_clique(const Graph& g, const VertexSet& within);
std::vector<int> lex_least_maximum_clique(const Graph& g);
/// ω of the subgraph induced by `within`.
int clique_number_within(const Graph& g, const VertexSet& within);

/// Perfection via odd hole / odd antihole search. Exponential; meant for n up to ~30.
bool is_perfect_small(const Graph& g);

}  // namespace chibind
