#include "chibind/graph.hpp"
#include "support/naive.hpp"

#include <doctest.h>

using namespace chibind;

TEST_CASE("from_edges deduplicates and rejects bad edges") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), GraphError);
}

TEST_CASE("named families") {
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::edgeless(4).edge_count() == 0);
    CHECK(Graph::cycle(6).edge_count() == 6);
    CHECK(Graph::path(6).edge_count() == 5);
    CHECK_THROWS_AS(Graph::cycle(2), GraphError);
    for (int v = 0; v < 7; ++v) CHECK(Graph::cycle(7).degree(v) == 2);
}

TEST_CASE("edges are sorted pairs u<v") {
    const Graph g = Graph::from_edges(5, {{4, 1}, {3, 0}, {2, 1}});
    const std::vector<Edge> want = {{0, 3}, {1, 2}, {1, 4}};
    CHECK(g.edges() == want);
}

TEST_CASE("complement is an involution and counts edges") {
    for (const auto& g : naive::corpus(200, 9, 11)) {
        const Graph c = complement(g);
        const long long n = g.order();
        CHECK(c.edge_count() + g.edge_count() == n * (n - 1) / 2);
        CHECK(complement(c) == g);
    }
}

TEST_CASE("disjoint union and join sizes") {
    const auto gs = naive::corpus(60, 6, 12);
    for (std::size_t i = 0; i + 1 < gs.size(); i += 2) {
        const Graph& a = gs[i];
        const Graph& b = gs[i + 1];
        const Graph u = disjoint_union(a, b);
        const Graph j = join(a, b);
        CHECK(u.order() == a.order() + b.order());
        CHECK(u.edge_count() == a.edge_count() + b.edge_count());
        CHECK(j.edge_count() == a.edge_count() + b.edge_count() + static_cast<long long>(a.order()) * b.order());
        CHECK(complement(j) == disjoint_union(complement(a), complement(b)));
    }
}

TEST_CASE("induced subgraphs compose") {
    std::mt19937_64 rng(5);
    for (const auto& g : naive::corpus(100, 9, 13)) {
        std::vector<int> outer;
        for (int v = 0; v < g.order(); ++v)
            if (rng() % 3 != 0) outer.push_back(v);
        std::vector<int> inner_local, inner_global;
        for (std::size_t i = 0; i < outer.size(); ++i)
            if (rng() % 2 == 0) {
                inner_local.push_back(static_cast<int>(i));
                inner_global.push_back(outer[i]);
            }
        const Graph h = induced(g, outer);
        CHECK(induced(h, inner_local) == induced(g, inner_global));
        for (std::size_t a = 0; a < outer.size(); ++a)
            for (std::size_t b = 0; b < outer.size(); ++b)
                if (a != b) CHECK(h.adjacent(static_cast<int>(a), static_cast<int>(b)) == g.adjacent(outer[a], outer[b]));
    }
}

TEST_CASE("induced rejects repeated and out of range vertices") {
    const Graph g = Graph::complete(4);
    const std::vector<int> twice = {1, 1};
    const std::vector<int> far = {0, 4};
    CHECK_THROWS_AS(induced(g, twice), GraphError);
    CHECK_THROWS_AS(induced(g, far), GraphError);
}

TEST_CASE("clique and independence predicates") {
    const Graph g = Graph::cycle(5);
    VertexSet s(5);
    s.insert(0);
    s.insert(1);
    CHECK(is_clique(g, s));
    CHECK_FALSE(is_independent(g, s));
    s.erase(1);
    s.insert(2);
    CHECK(is_independent(g, s));
    CHECK(is_clique(g, VertexSet(5)));
}

TEST_CASE("compact relabels by ascending label") {
    const Coloring c = compact({7, 3, 7, 9});
    CHECK(c.colors == std::vector<int>{2, 1, 2, 3});
    CHECK(c.palette_size == 3);
    CHECK(c.colors_used() == 3);
}

TEST_CASE("is_proper") {
    const Graph g = Graph::path(3);
    CHECK(is_proper(g, Coloring{{1, 2, 1}, 2}));
    CHECK_FALSE(is_proper(g, Coloring{{1, 1, 2}, 2}));
    CHECK_THROWS_AS(is_proper(g, Coloring{{1, 2}, 2}), GraphError);
    CHECK_THROWS_AS(is_proper(g, Coloring{{1, 0, 1}, 2}), GraphError);
    CHECK_THROWS_AS(is_proper(g, Coloring{{1, 3, 1}, 2}), GraphError);
}

TEST_CASE("vertex set operations") {
    VertexSet a(130), b(130);
    a.insert(0);
    a.insert(64);
    a.insert(129);
    b.insert(64);
    CHECK(a.count() == 3);
    CHECK((a & b).count() == 1);
    CHECK((a - b).to_vector() == std::vector<int>{0, 129});
    CHECK(a.next(1) == 64);
    CHECK(a.next(130) == -1);
    CHECK(a.intersects(b));
    CHECK(VertexSet::full(70).count() == 70);
}
