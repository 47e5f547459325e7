#pragma once

#include "chibind/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chibind {

enum class PatternKind {
    P3UnionP2,      // P3 ∪ P2
    TwoK2,          // 2K2
    Diamond,        // K4 - e
    Hvn,            // (K1 ∪ K2) + K2
    Paw,            // (K1 ∪ K2) + K1
    K1K2PlusKp,     // (K1 ∪ K2) + Kp
    TwoK1PlusKp,    // 2K1 + Kp
    Complete,       // Kn
    Cycle,          // Cn
    Path,           // Pn
    OddHole,        // C_{2k+1}, k >= 2 (any length when n is unset)
    OddAntihole,    // complement of C_{2k+1}, k >= 3 (any length when n is unset)
};

/// A named forbidden pattern; `p` only for the +Kp families, `n` only for Kn/Cn/Pn and
/// (optionally) a fixed odd hole/antihole length.
struct PatternSpec {
    PatternKind kind{};
    std::optional<int> p;
    std::optional<int> n;

    static PatternSpec p3p2() { return {PatternKind::P3UnionP2, {}, {}}; }
    static PatternSpec two_k2() { return {PatternKind::TwoK2, {}, {}}; }
    static PatternSpec diamond() { return {PatternKind::Diamond, {}, {}}; }
    static PatternSpec hvn() { return {PatternKind::Hvn, {}, {}}; }
    static PatternSpec paw() { return {PatternKind::Paw, {}, {}}; }
    static PatternSpec k1k2_kp(int p) { return {PatternKind::K1K2PlusKp, p, {}}; }
    static PatternSpec two_k1_kp(int p) { return {PatternKind::TwoK1PlusKp, p, {}}; }
    static PatternSpec complete(int n) { return {PatternKind::Complete, {}, n}; }
    static PatternSpec cycle(int n) { return {PatternKind::Cycle, {}, n}; }
    static PatternSpec path(int n) { return {PatternKind::Path, {}, n}; }
    static PatternSpec odd_hole() { return {PatternKind::OddHole, {}, {}}; }
    static PatternSpec odd_antihole() { return {PatternKind::OddAntihole, {}, {}}; }

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

class PatternError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// CLI spelling: "p3p2", "2k2", "diamond", "hvn", "paw", "k1k2+kp:<p>", "2k1+kp:<p>",
/// "k<n>", "c<n>", "p<n>", "odd-hole", "odd-antihole".
std::string to_string(const PatternSpec& spec);
PatternSpec parse_pattern(std::string_view text);
/// Comma-separated list of pattern names.
std::vector<PatternSpec> parse_pattern_list(std::string_view text);

/// Throws PatternError when a parameter is missing, extra or out of range.
void validate(const PatternSpec& spec);
/// Concrete pattern graph built with the union/join algebra. Odd hole/antihole need `n`.
Graph materialize(const PatternSpec& spec);

/// An induced copy: vertices[r] is the host vertex playing pattern vertex r.
struct Occurrence {
    std::vector<int> vertices;
    PatternSpec pattern;
};

/// Re-checks that `occ` is an induced copy of its pattern under the role order.
bool verify_occurrence(const Graph& host, const Occurrence& occ);

/// First induced copy in search order, or nullopt iff g is spec-free.
std::optional<Occurrence> find_induced(const Graph& g, const PatternSpec& spec);
/// Same as find_induced but restricted to vertices of `within`.
std::optional<Occurrence> find_induced_within(const Graph& g, const PatternSpec& spec, const VertexSet& within);
/// First violated pattern of the list, if any.
std::optional<Occurrence> first_occurrence(const Graph& g, const std::vector<PatternSpec>& specs);
bool is_free(const Graph& g, const std::vector<PatternSpec>& specs);

/// Induced odd cycle of length >= 5 in g, else induced odd cycle of length >= 7 in the
/// complement (C̄5 = C5 is only ever reported as a hole). Holes are searched before
/// antiholes at each length, shortest length first.
std::optional<Occurrence> odd_hole_or_antihole(const Graph& g);

/// True iff the complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);

}  // namespace chibind
