#include "chibind/graph.hpp"

#include <algorithm>
#include <set>

namespace chibind {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge #" + std::to_string(i) + " (" + std::to_string(u) + "," +
                             std::to_string(v) + ") has an endpoint outside 0.." +
                             std::to_string(n - 1));
        if (u == v) throw GraphError("edge #" + std::to_string(i) + " is a self-loop at " + std::to_string(u));
        g.link(u, v);
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.link(u, v);
    return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::cycle(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.link(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.link(v, v + 1);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& s : adj_) twice += s.count();
    return twice / 2;
}

VertexSet Graph::non_neighbors(int v) const {
    VertexSet s = VertexSet::full(n_) - neighbors(v);
    s.erase(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next(u + 1); v >= 0; v = neighbors(u).next(v + 1)) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.n_);
    for (int v = 0; v < g.n_; ++v) h.adj_[static_cast<std::size_t>(v)] = g.non_neighbors(v);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n_ + b.n_);
    for (auto [u, v] : a.edges()) h.link(u, v);
    for (auto [u, v] : b.edges()) h.link(u + a.n_, v + a.n_);
    return h;
}

Graph join(const Graph& a, const Graph& b) {
    Graph h = disjoint_union(a, b);
    for (int u = 0; u < a.n_; ++u)
        for (int v = 0; v < b.n_; ++v) h.link(u, a.n_ + v);
    return h;
}

Graph induced(const Graph& g, std::span<const int> vertices) {
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError("induced: repeated vertex");
    for (int v : sorted)
        if (v < 0 || v >= g.n_) throw GraphError("induced: vertex " + std::to_string(v) + " out of range");
    const int k = static_cast<int>(sorted.size());
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(sorted[static_cast<std::size_t>(i)], sorted[static_cast<std::size_t>(j)])) h.link(i, j);
    return h;
}

Graph induced(const Graph& g, const VertexSet& vertices) {
    auto list = vertices.to_vector();
    return induced(g, std::span<const int>(list));
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v + 1)) {
        VertexSet rest = s;
        rest.erase(v);
        if (!(rest - g.neighbors(v)).empty()) return false;
    }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v + 1))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

int Coloring::colors_used() const {
    std::set<int> distinct(colors.begin(), colors.end());
    return static_cast<int>(distinct.size());
}

Coloring compact(std::vector<int> colors) {
    std::vector<int> labels = colors;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (auto& c : colors)
        c = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), c) - labels.begin()) + 1;
    return Coloring{std::move(colors), static_cast<int>(labels.size())};
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order())
        throw GraphError("colouring covers " + std::to_string(c.colors.size()) + " of " +
                         std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.palette_size)
            throw GraphError("vertex " + std::to_string(v) + " has colour " + std::to_string(c.colors[v]) +
                             " outside 1.." + std::to_string(c.palette_size));
    for (auto [u, v] : g.edges())
        if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) return false;
    return true;
}

}  // namespace chibind
