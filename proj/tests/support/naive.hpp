#pragma once

// Brute-force reference implementations used to cross-check the library. They only
// read adjacency through Graph::adjacent and share no search code with src/.

#include "chibind/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace naive {

using chibind::Graph;

struct Pattern {
    std::string name;
    int order = 0;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int a, int b) const {
        for (auto [u, v] : edges)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    }
};

inline Pattern complete(int n) {
    Pattern p{"k" + std::to_string(n), n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) p.edges.emplace_back(u, v);
    return p;
}

inline Pattern cycle(int n) {
    Pattern p{"c" + std::to_string(n), n, {}};
    for (int u = 0; u < n; ++u) p.edges.emplace_back(u, (u + 1) % n);
    return p;
}

inline Pattern path(int n) {
    Pattern p{"p" + std::to_string(n), n, {}};
    for (int u = 0; u + 1 < n; ++u) p.edges.emplace_back(u, u + 1);
    return p;
}

inline Pattern anticycle(int n) {
    Pattern p{"anti-c" + std::to_string(n), n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v != u + 1 && !(u == 0 && v == n - 1)) p.edges.emplace_back(u, v);
    return p;
}

inline Pattern p3p2() { return {"p3p2", 5, {{0, 1}, {1, 2}, {3, 4}}}; }
inline Pattern two_k2() { return {"2k2", 4, {{0, 1}, {2, 3}}}; }
inline Pattern diamond() { return {"diamond", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}}; }
inline Pattern paw() { return {"paw", 4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}}; }
inline Pattern hvn() {
    Pattern p = complete(4);
    p.name = "hvn";
    p.order = 5;
    p.edges.emplace_back(4, 0);
    p.edges.emplace_back(4, 1);
    return p;
}

// a, b–c, then a K_p joined to all three
inline Pattern k1k2_kp(int k) {
    Pattern p{"k1k2+kp:" + std::to_string(k), k + 3, {{1, 2}}};
    for (int x = 3; x < k + 3; ++x) {
        for (int y = 0; y < x; ++y) p.edges.emplace_back(y, x);
    }
    return p;
}

// two non-adjacent vertices joined to a K_p
inline Pattern two_k1_kp(int k) {
    Pattern p{"2k1+kp:" + std::to_string(k), k + 2, {}};
    for (int x = 2; x < k + 2; ++x)
        for (int y = 0; y < x; ++y) p.edges.emplace_back(y, x);
    return p;
}

/// Tries every vertex subset of the right size under every bijection.
inline bool contains(const Graph& g, const Pattern& pat) {
    const int n = g.order(), k = pat.order;
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        int at = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) pick[static_cast<std::size_t>(at++)] = v;
        do {
            bool same = true;
            for (int a = 0; a < k && same; ++a)
                for (int b = a + 1; b < k && same; ++b)
                    same = g.adjacent(pick[static_cast<std::size_t>(a)], pick[static_cast<std::size_t>(b)]) == pat.adjacent(a, b);
            if (same) return true;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return false;
}

inline int clique_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1u) && (mask >> v & 1u)) ok = g.adjacent(u, v);
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int independence_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1u) && (mask >> v & 1u)) ok = !g.adjacent(u, v);
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

/// Enumerates colour assignments vertex by vertex in index order.
inline bool k_colorable(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> col(static_cast<std::size_t>(n), -1);
    auto place = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) && col[static_cast<std::size_t>(u)] == c) ok = false;
            if (!ok) continue;
            col[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
        }
        col[static_cast<std::size_t>(v)] = -1;
        return false;
    };
    return place(place, 0);
}

inline int chromatic_number(const Graph& g) {
    int k = 0;
    while (!k_colorable(g, k)) ++k;
    return k;
}

inline bool connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v) && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/// Non-adjacency is an equivalence relation.
inline bool complete_multipartite(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (u != v && v != w && u != w && !g.adjacent(u, v) && !g.adjacent(v, w) && g.adjacent(u, w))
                    return false;
    return true;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<chibind::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Clique 0..w-1 plus m vertices, each missing one clique vertex, or a pair (i,j) with
/// j < max_j together with some clique vertices past j; random edges among the extras.
/// Reaches partition shapes the edge-insertion sampler rarely produces.
inline Graph planted_partition(int w, int m, int max_j, std::mt19937_64& rng) {
    std::vector<chibind::Edge> edges;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v) edges.emplace_back(u, v);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int x = w; x < w + m; ++x) {
        int i = 0, j = 0;
        if (rng() % 4 == 0) {
            i = j = static_cast<int>(rng() % static_cast<unsigned>(w));
        } else {
            j = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(max_j, w - 1)));
            i = static_cast<int>(rng() % static_cast<unsigned>(j));
        }
        std::bernoulli_distribution stay(unit(rng));
        for (int a = 0; a < w; ++a) {
            if (a == i || a == j || (i != j && a > j && !stay(rng))) continue;
            edges.emplace_back(a, x);
        }
    }
    std::bernoulli_distribution coin(0.2 + 0.8 * unit(rng));
    for (int x = w; x < w + m; ++x)
        for (int y = x + 1; y < w + m; ++y)
            if (coin(rng)) edges.emplace_back(x, y);
    return Graph::from_edges(w + m, edges);
}

/// Seeded corpus of graphs with 1..max_n vertices and mixed densities.
inline std::vector<Graph> corpus(int count, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(1, max_n);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int n = order(rng);
        out.push_back(random_graph(n, density(rng), rng));
    }
    return out;
}

}  // namespace naive
