#pragma once

#include "chibind/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chibind {

/// Vertex partition around a maximum clique A = {v_1..v_ω}:
///   I_k     = vertices outside A missing exactly v_k in A,
///   C_{i,j} = vertices missing v_i and v_j, with (i,j) the lexicographically least such pair,
///   U_k     = {v_k} ∪ I_k,  V1 = ∪ U_k,  V2 = ∪ C_{i,j}.
/// Indices i, j, k are 1-based as in the usual notation; vertex ids are 0-based.
struct WagonPartition {
    int order = 0;
    std::vector<int> clique;               // v_1..v_ω, ascending
    std::vector<VertexSet> independents;   // I_1..I_ω at [k-1]
    std::vector<VertexSet> lexsets;        // C_{i,j} at [(i-1)*ω + (j-1)], used only for i<j

    int omega() const { return static_cast<int>(clique.size()); }
    int v(int k) const { return clique[static_cast<std::size_t>(k - 1)]; }
    const VertexSet& I(int k) const { return independents[static_cast<std::size_t>(k - 1)]; }
    const VertexSet& C(int i, int j) const { return lexsets[index(i, j)]; }
    VertexSet& C(int i, int j) { return lexsets[index(i, j)]; }
    VertexSet U(int k) const;
    VertexSet A() const;
    VertexSet V1() const;
    VertexSet V2() const;
    /// ∪_{i<j} C_{i,j} for a fixed j.
    VertexSet level(int j) const;
    /// L in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * clique.size() + static_cast<std::size_t>(j - 1);
    }
};

/// A is the lexicographically least maximum clique. Throws GraphError on the empty graph.
WagonPartition wagon_partition(const Graph& g);

/// Every violated partition invariant, as human-readable lines; empty iff valid.
std::vector<std::string> partition_violations(const Graph& g, const WagonPartition& p);
bool verify_partition(const Graph& g, const WagonPartition& p);

}  // namespace chibind
