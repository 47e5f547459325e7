#include "chibind/patterns.hpp"
#include "support/naive.hpp"

#include <doctest.h>

using namespace chibind;

namespace {

struct Pair {
    PatternSpec spec;
    naive::Pattern reference;
};

std::vector<Pair> small_patterns() {
    return {
        {PatternSpec::p3p2(), naive::p3p2()},
        {PatternSpec::two_k2(), naive::two_k2()},
        {PatternSpec::diamond(), naive::diamond()},
        {PatternSpec::hvn(), naive::hvn()},
        {PatternSpec::paw(), naive::paw()},
        {PatternSpec::k1k2_kp(1), naive::k1k2_kp(1)},
        {PatternSpec::k1k2_kp(2), naive::k1k2_kp(2)},
        {PatternSpec::k1k2_kp(3), naive::k1k2_kp(3)},
        {PatternSpec::two_k1_kp(1), naive::two_k1_kp(1)},
        {PatternSpec::two_k1_kp(2), naive::two_k1_kp(2)},
        {PatternSpec::two_k1_kp(3), naive::two_k1_kp(3)},
        {PatternSpec::complete(3), naive::complete(3)},
        {PatternSpec::complete(4), naive::complete(4)},
        {PatternSpec::cycle(4), naive::cycle(4)},
        {PatternSpec::cycle(5), naive::cycle(5)},
        {PatternSpec::path(3), naive::path(3)},
        {PatternSpec::path(4), naive::path(4)},
    };
}

}  // namespace

TEST_CASE("materialized patterns match the hand-built references") {
    for (const auto& [spec, ref] : small_patterns()) {
        const Graph h = materialize(spec);
        CAPTURE(to_string(spec));
        CHECK(h.order() == ref.order);
        CHECK(h.edge_count() == static_cast<long long>(ref.edges.size()));
        CHECK(naive::contains(h, ref));
    }
    CHECK(materialize(PatternSpec::diamond()).edge_count() == 5);
    CHECK(materialize(PatternSpec::hvn()).edge_count() == 8);
    CHECK(materialize(PatternSpec::paw()).edge_count() == 4);
}

TEST_CASE("recognizer agrees with brute force on small graphs") {
    const auto corpus = naive::corpus(400, 6, 31);
    for (const auto& [spec, ref] : small_patterns()) {
        CAPTURE(to_string(spec));
        for (const auto& g : corpus) {
            const auto occ = find_induced(g, spec);
            REQUIRE(occ.has_value() == naive::contains(g, ref));
            if (occ) CHECK(verify_occurrence(g, *occ));
        }
    }
}

TEST_CASE("odd holes and antiholes") {
    CHECK(odd_hole_or_antihole(Graph::cycle(5))->pattern.n == 5);
    CHECK(odd_hole_or_antihole(Graph::cycle(7))->pattern.kind == PatternKind::OddHole);
    const auto anti = odd_hole_or_antihole(complement(Graph::cycle(7)));
    REQUIRE(anti);
    CHECK(anti->pattern.kind == PatternKind::OddAntihole);
    CHECK(verify_occurrence(complement(Graph::cycle(7)), *anti));
    CHECK_FALSE(odd_hole_or_antihole(Graph::cycle(6)));
    CHECK_FALSE(odd_hole_or_antihole(complement(Graph::cycle(6))));
    CHECK_FALSE(odd_hole_or_antihole(Graph::complete(6)));
    CHECK(find_induced(Graph::cycle(9), PatternSpec::odd_hole())->pattern.n == 9);
    CHECK_FALSE(find_induced(Graph::cycle(9), PatternSpec::odd_antihole()));

    for (const auto& g : naive::corpus(300, 7, 32)) {
        const bool brute = naive::contains(g, naive::cycle(5)) || naive::contains(g, naive::cycle(7)) ||
                           naive::contains(g, naive::anticycle(7));
        const auto occ = odd_hole_or_antihole(g);
        CHECK(occ.has_value() == brute);
        if (occ) CHECK(verify_occurrence(g, *occ));
    }
}

TEST_CASE("freeness is hereditary") {
    std::mt19937_64 rng(33);
    const std::vector<PatternSpec> family = {PatternSpec::p3p2(), PatternSpec::diamond()};
    int checked = 0;
    for (const auto& g : naive::corpus(400, 8, 34)) {
        if (!is_free(g, family)) continue;
        ++checked;
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (rng() % 2) keep.push_back(v);
        CHECK(is_free(induced(g, keep), family));
    }
    CHECK(checked > 20);
}

TEST_CASE("search restricted to a vertex subset") {
    const Graph g = Graph::cycle(6);
    VertexSet within(6);
    for (int v : {0, 1, 2}) within.insert(v);
    const auto occ = find_induced_within(g, PatternSpec::path(3), within);
    REQUIRE(occ);
    CHECK(occ->vertices.size() == 3);
    for (int v : occ->vertices) CHECK(within.contains(v));
    within.erase(1);
    CHECK_FALSE(find_induced_within(g, PatternSpec::path(2), within));
}

TEST_CASE("pattern names round trip") {
    for (const char* name : {"p3p2", "2k2", "diamond", "hvn", "paw", "k1k2+kp:3", "2k1+kp:2", "k5", "c7", "p4",
                             "odd-hole", "odd-antihole", "odd-hole:7"})
        CHECK(to_string(parse_pattern(name)) == name);
    CHECK(parse_pattern("Diamond") == PatternSpec::diamond());
    CHECK(parse_pattern_list("p3p2,hvn") == std::vector<PatternSpec>{PatternSpec::p3p2(), PatternSpec::hvn()});
}

TEST_CASE("pattern parameter validation") {
    CHECK_THROWS_AS(parse_pattern("k1k2+kp:"), PatternError);
    CHECK_THROWS_AS(parse_pattern("c2"), PatternError);
    CHECK_THROWS_AS(parse_pattern("odd-hole:6"), PatternError);
    CHECK_THROWS_AS(parse_pattern("triangle"), PatternError);
    CHECK_THROWS_AS(parse_pattern_list("p3p2,,hvn"), PatternError);
    CHECK_THROWS_AS(validate(PatternSpec{PatternKind::K1K2PlusKp, {}, {}}), PatternError);
    CHECK_THROWS_AS(validate(PatternSpec{PatternKind::Diamond, 2, {}}), PatternError);
    CHECK_THROWS_AS(validate(PatternSpec{PatternKind::Complete, {}, {}}), PatternError);
    CHECK_THROWS_AS(materialize(PatternSpec::odd_hole()), PatternError);
    try {
        validate(PatternSpec{PatternKind::TwoK1PlusKp, {}, {}});
    } catch (const PatternError& e) {
        CHECK(std::string(e.what()) == "2k1+kp: missing parameter p");
    }
}

TEST_CASE("complete multipartite recognition") {
    CHECK(is_complete_multipartite(join(Graph::edgeless(2), Graph::edgeless(3))));
    CHECK(is_complete_multipartite(Graph::complete(4)));
    CHECK(is_complete_multipartite(Graph::path(3)));
    CHECK_FALSE(is_complete_multipartite(Graph::path(4)));
    for (const auto& g : naive::corpus(300, 7, 35)) CHECK(is_complete_multipartite(g) == naive::complete_multipartite(g));
}

TEST_CASE("absent large cliques are ruled out quickly") {
    // cocktail party graph: ω = 12, a 2K1+K12 would need a 12-clique avoiding one whole pair
    std::vector<Edge> edges;
    for (int u = 0; u < 24; ++u)
        for (int v = u + 1; v < 24; ++v)
            if (v != u + 12) edges.emplace_back(u, v);
    const Graph g = Graph::from_edges(24, edges);
    CHECK(find_induced(g, PatternSpec::complete(12)).has_value());
    CHECK_FALSE(find_induced(g, PatternSpec::complete(13)).has_value());
    CHECK(find_induced(g, PatternSpec::two_k1_kp(11)).has_value());
    CHECK_FALSE(find_induced(g, PatternSpec::two_k1_kp(12)).has_value());
}
