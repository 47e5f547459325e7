#pragma once

#include "chibind/graph.hpp"
#include "chibind/patterns.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chibind {

class AtlasError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction together with a human-readable label per vertex.
struct NamedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// G*(ω, p) on X ∪ Y ∪ Z, vertex order x_1..x_ω, y_1..y_ω, z_1..z_{p-1}:
/// X, Y, Z are cliques; x_m y_n and y_m z_n for m ≠ n (n ≤ p-1); x_n z_n for n ≤ p-1.
/// Requires p >= 1 and ω >= max(3, p).
NamedGraph g_star(int omega, int p);

/// μ(G): originals 0..n-1, shadows n..2n-1 (shadow of v sees N(v)), apex 2n sees all shadows.
Graph mycielski(const Graph& g);

/// μ(C5), labelled u1..u5, w1..w5, z.
NamedGraph grotzsch();

/// Intersection graph of the 27 lines of a cubic surface in double-six labelling
/// a_1..a_6, b_1..b_6, c_{ij}: a_i~b_j (i≠j), a_i~c_{jk} and b_i~c_{jk} (i∈{j,k}),
/// c_{ij}~c_{kl} ({i,j}∩{k,l}=∅).
NamedGraph schlafli_complement();

struct ExtremalSpec {
    enum class Kind { g_star, grotzsch, schlafli_complement, mycielski } kind{};
    int omega = 0;
    int p = 0;
    Graph base;
};
NamedGraph build(const ExtremalSpec& spec);

struct SamplerOptions {
    int max_restarts = 200;
    int repair_steps = 24;
};

class SamplerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seeded random edge insertion with repair. A clique of size omega_target is planted
/// and protected, and K_{omega_target+1} is added to the forbidden list, so the result
/// has exactly that clique number. After each insertion any forbidden occurrence is
/// repaired by deleting a uniformly chosen unprotected edge of it; if repair does not
/// converge the insertion is rolled back. The distribution is biased, not uniform.
/// Deterministic per seed. Throws SamplerError when no instance is found.
Graph sample_free(const std::vector<PatternSpec>& specs, int n, std::optional<int> omega_target,
                  std::uint64_t seed, const SamplerOptions& options = {});

}  // namespace chibind
