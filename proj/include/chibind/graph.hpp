#pragma once

#include "chibind/vertex_set.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chibind {

using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on out-of-range endpoints or self-loops; duplicates are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    static Graph complete(int n);
    static Graph edgeless(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// All vertices other than v that are not adjacent to v.
    VertexSet non_neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Edges (u,v) with u<v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(int n);
    void link(int u, int v) {
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;

    friend Graph complement(const Graph& g);
    friend Graph disjoint_union(const Graph& a, const Graph& b);
    friend Graph join(const Graph& a, const Graph& b);
    friend Graph induced(const Graph& g, std::span<const int> vertices);
};

Graph complement(const Graph& g);
/// G1 ∪ G2 with the vertices of b shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// G1 + G2: disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);
/// Subgraph induced by `vertices`, relabelled in ascending vertex order.
Graph induced(const Graph& g, std::span<const int> vertices);
Graph induced(const Graph& g, const VertexSet& vertices);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Total assignment vertex -> colour in 1..palette_size.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;

    /// Number of distinct colours actually used.
    int colors_used() const;
};

/// Relabel colours to 1..k in increasing order of the original labels.
Coloring compact(std::vector<int> colors);

/// True iff no edge is monochromatic. Throws GraphError if `c` is not a total
/// colouring of g with colours in 1..palette_size.
bool is_proper(const Graph& g, const Coloring& c);

}  // namespace chibind
