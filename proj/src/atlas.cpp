#include "chibind/atlas.hpp"

#include "chibind/oracles.hpp"

#include <algorithm>
#include <random>

namespace chibind {

NamedGraph g_star(int omega, int p) {
    if (p < 1) throw AtlasError("g-star needs p >= 1");
    if (omega < std::max(3, p)) throw AtlasError("g-star needs omega >= max(3, p)");
    const int w = omega;
    auto x = [](int i) { return i - 1; };
    auto y = [w](int i) { return w + i - 1; };
    auto z = [w](int i) { return 2 * w + i - 1; };

    std::vector<Edge> edges;
    for (int i = 1; i <= w; ++i)
        for (int j = i + 1; j <= w; ++j) {
            edges.emplace_back(x(i), x(j));
            edges.emplace_back(y(i), y(j));
        }
    for (int r = 1; r < p; ++r)
        for (int s = r + 1; s < p; ++s) edges.emplace_back(z(r), z(s));
    for (int m = 1; m <= w; ++m)
        for (int n = 1; n < p; ++n) {
            if (m == n) continue;
            edges.emplace_back(x(m), y(n));
            edges.emplace_back(y(m), z(n));
        }
    for (int n = 1; n < p; ++n) edges.emplace_back(x(n), z(n));

    NamedGraph out{Graph::from_edges(2 * w + p - 1, edges), {}};
    for (int i = 1; i <= w; ++i) out.labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= w; ++i) out.labels.push_back("y" + std::to_string(i));
    for (int i = 1; i < p; ++i) out.labels.push_back("z" + std::to_string(i));
    return out;
}

Graph mycielski(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(n + u, v);
        edges.emplace_back(n + v, u);
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph::from_edges(2 * n + 1, edges);
}

NamedGraph grotzsch() {
    NamedGraph out{mycielski(Graph::cycle(5)), {}};
    for (int i = 1; i <= 5; ++i) out.labels.push_back("u" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) out.labels.push_back("w" + std::to_string(i));
    out.labels.push_back("z");
    return out;
}

NamedGraph schlafli_complement() {
    NamedGraph out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 6; ++i) out.labels.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) out.labels.push_back("b" + std::to_string(i));
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            pairs.emplace_back(i, j);
            out.labels.push_back("c" + std::to_string(i) + std::to_string(j));
        }
    auto a = [](int i) { return i - 1; };
    auto b = [](int i) { return 5 + i; };
    auto c = [](std::size_t idx) { return 12 + static_cast<int>(idx); };

    std::vector<Edge> edges;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) edges.emplace_back(a(i), b(j));
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        auto [j, k] = pairs[idx];
        for (int i : {j, k}) {
            edges.emplace_back(a(i), c(idx));
            edges.emplace_back(b(i), c(idx));
        }
        for (std::size_t other = idx + 1; other < pairs.size(); ++other) {
            auto [l, m] = pairs[other];
            if (j != l && j != m && k != l && k != m) edges.emplace_back(c(idx), c(other));
        }
    }
    out.graph = Graph::from_edges(27, edges);
    return out;
}

NamedGraph build(const ExtremalSpec& spec) {
    switch (spec.kind) {
    case ExtremalSpec::Kind::g_star: return g_star(spec.omega, spec.p);
    case ExtremalSpec::Kind::grotzsch: return grotzsch();
    case ExtremalSpec::Kind::schlafli_complement: return schlafli_complement();
    case ExtremalSpec::Kind::mycielski: {
        NamedGraph out{mycielski(spec.base), {}};
        const int n = spec.base.order();
        for (int i = 0; i < n; ++i) out.labels.push_back("v" + std::to_string(i));
        for (int i = 0; i < n; ++i) out.labels.push_back("s" + std::to_string(i));
        out.labels.push_back("apex");
        return out;
    }
    }
    throw AtlasError("unknown construction");
}

namespace {

class EdgeTable {
public:
    explicit EdgeTable(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
    bool has(int u, int v) const { return cells_[idx(u, v)] != 0; }
    void set(int u, int v, bool on) {
        cells_[idx(u, v)] = on;
        cells_[idx(v, u)] = on;
    }
    Graph graph() const {
        std::vector<Edge> edges;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has(u, v)) edges.emplace_back(u, v);
        return Graph::from_edges(n_, edges);
    }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    int n_;
    std::vector<char> cells_;
};

}  // namespace

Graph sample_free(const std::vector<PatternSpec>& specs, int n, std::optional<int> omega_target,
                  std::uint64_t seed, const SamplerOptions& options) {
    if (n < 0) throw SamplerError("negative vertex count");
    if (omega_target && (*omega_target > n || *omega_target < 0 || (*omega_target == 0 && n > 0)))
        throw SamplerError("clique number " + std::to_string(*omega_target) + " is impossible on " +
                           std::to_string(n) + " vertices");
    for (const auto& s : specs) validate(s);
    std::vector<PatternSpec> forbidden = specs;
    if (omega_target) forbidden.push_back(PatternSpec::complete(*omega_target + 1));

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < options.max_restarts; ++attempt) {
        EdgeTable table(n);
        EdgeTable protect(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const int planted = omega_target.value_or(0);
        for (int a = 0; a < planted; ++a)
            for (int b = a + 1; b < planted; ++b) {
                table.set(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)], true);
                protect.set(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)], true);
            }
        if (!is_free(table.graph(), forbidden))
            throw SamplerError("the planted clique itself contains a forbidden pattern");

        std::vector<Edge> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!table.has(u, v)) candidates.emplace_back(u, v);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        const auto tries = std::uniform_int_distribution<std::size_t>(0, candidates.size())(rng);

        for (std::size_t t = 0; t < tries; ++t) {
            const EdgeTable before = table;
            table.set(candidates[t].first, candidates[t].second, true);
            bool repaired = false;
            for (int step = 0; step < options.repair_steps; ++step) {
                auto occ = first_occurrence(table.graph(), forbidden);
                if (!occ) {
                    repaired = true;
                    break;
                }
                std::vector<Edge> removable;
                const auto& vs = occ->vertices;
                for (std::size_t a = 0; a < vs.size(); ++a)
                    for (std::size_t b = a + 1; b < vs.size(); ++b)
                        if (table.has(vs[a], vs[b]) && !protect.has(vs[a], vs[b])) removable.emplace_back(vs[a], vs[b]);
                if (removable.empty()) break;
                const auto pick = std::uniform_int_distribution<std::size_t>(0, removable.size() - 1)(rng);
                table.set(removable[pick].first, removable[pick].second, false);
            }
            if (!repaired) table = before;
        }

        Graph g = table.graph();
        if (!is_free(g, forbidden)) continue;
        if (omega_target && clique_number(g).value != *omega_target) continue;
        return g;
    }
    throw SamplerError("no instance found after " + std::to_string(options.max_restarts) + " restarts");
}

}  // namespace chibind
