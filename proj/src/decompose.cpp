#include "chibind/decompose.hpp"

#include "chibind/oracles.hpp"
#include "chibind/patterns.hpp"

namespace chibind {

VertexSet WagonPartition::U(int k) const {
    VertexSet s = I(k);
    s.insert(v(k));
    return s;
}

VertexSet WagonPartition::A() const {
    VertexSet s(order);
    for (int x : clique) s.insert(x);
    return s;
}

VertexSet WagonPartition::V1() const {
    VertexSet s = A();
    for (const auto& ik : independents) s |= ik;
    return s;
}

VertexSet WagonPartition::V2() const {
    VertexSet s(order);
    for (auto [i, j] : pairs()) s |= C(i, j);
    return s;
}

VertexSet WagonPartition::level(int j) const {
    VertexSet s(order);
    if (j < 2 || j > omega()) return s;
    for (int i = 1; i < j; ++i) s |= C(i, j);
    return s;
}

std::vector<std::pair<int, int>> WagonPartition::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= omega(); ++i)
        for (int j = i + 1; j <= omega(); ++j) out.emplace_back(i, j);
    return out;
}

WagonPartition wagon_partition(const Graph& g) {
    if (g.order() == 0) throw GraphError("wagon_partition needs at least one vertex");
    WagonPartition p;
    p.order = g.order();
    p.clique = lex_least_maximum_clique(g);
    const int w = p.omega();
    p.independents.assign(static_cast<std::size_t>(w), VertexSet(g.order()));
    p.lexsets.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(w), VertexSet(g.order()));

    const VertexSet a = p.A();
    for (int x = 0; x < g.order(); ++x) {
        if (a.contains(x)) continue;
        // first two clique positions x misses; a maximum clique guarantees at least one
        int first = 0, second = 0, missing = 0;
        for (int k = 1; k <= w; ++k) {
            if (g.adjacent(x, p.v(k))) continue;
            ++missing;
            if (first == 0) first = k;
            else if (second == 0) second = k;
        }
        if (missing == 1) p.independents[static_cast<std::size_t>(first - 1)].insert(x);
        else p.C(first, second).insert(x);
    }
    return p;
}

std::vector<std::string> partition_violations(const Graph& g, const WagonPartition& p) {
    std::vector<std::string> out;
    auto bad = [&](std::string msg) { out.push_back(std::move(msg)); };
    const int n = g.order();
    const int w = p.omega();
    if (p.order != n) {
        bad("partition is for " + std::to_string(p.order) + " vertices, graph has " + std::to_string(n));
        return out;
    }
    if (static_cast<int>(p.independents.size()) != w ||
        p.lexsets.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(w)) {
        bad("partition tables do not match |A|");
        return out;
    }
    for (int x : p.clique)
        if (x < 0 || x >= n) {
            bad("clique vertex " + std::to_string(x) + " out of range");
            return out;
        }

    const VertexSet a = p.A();
    if (a.count() != w || !is_clique(g, a)) bad("A is not a clique");
    if (w != clique_number(g).value) bad("A is not a maximum clique");

    std::vector<int> owners(static_cast<std::size_t>(n), 0);
    auto claim = [&](const VertexSet& s) { s.for_each([&](int x) { ++owners[static_cast<std::size_t>(x)]; }); };
    claim(a);
    for (int k = 1; k <= w; ++k) claim(p.I(k));
    for (auto [i, j] : p.pairs()) claim(p.C(i, j));
    for (int x = 0; x < n; ++x) {
        if (owners[static_cast<std::size_t>(x)] == 0) bad("vertex " + std::to_string(x) + " is in no part");
        if (owners[static_cast<std::size_t>(x)] > 1) bad("vertex " + std::to_string(x) + " is in several parts");
    }

    for (int k = 1; k <= w; ++k) {
        const VertexSet& ik = p.I(k);
        if (!is_independent(g, ik)) bad("I_" + std::to_string(k) + " is not independent");
        ik.for_each([&](int x) {
            for (int l = 1; l <= w; ++l)
                if (g.adjacent(x, p.v(l)) == (l == k))
                    bad("vertex " + std::to_string(x) + " in I_" + std::to_string(k) + " has the wrong neighbours in A");
        });
    }

    const bool p3p2_free = is_free(g, {PatternSpec::p3p2()});
    for (auto [i, j] : p.pairs()) {
        const VertexSet& cij = p.C(i, j);
        const std::string name = "C_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        cij.for_each([&](int x) {
            if (g.adjacent(x, p.v(i)) || g.adjacent(x, p.v(j)))
                bad("vertex " + std::to_string(x) + " in " + name + " sees v_i or v_j");
            for (int k = 1; k < j; ++k)
                if (k != i && !g.adjacent(x, p.v(k)))
                    bad("vertex " + std::to_string(x) + " in " + name + " is not lexicographically least");
        });
        if (clique_number_within(g, cij) > w - j + 2) bad(name + " has clique number above ω-j+2");
        if (p3p2_free && find_induced_within(g, PatternSpec::path(3), cij))
            bad(name + " contains an induced P3 in a (P3 ∪ P2)-free graph");
    }
    return out;
}

bool verify_partition(const Graph& g, const WagonPartition& p) { return partition_violations(g, p).empty(); }

}  // namespace chibind
