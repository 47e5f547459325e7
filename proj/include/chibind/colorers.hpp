#pragma once

#include "chibind/graph.hpp"
#include "chibind/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chibind {

/// Ties a colouring to the χ-bound it was produced under.
struct BoundCertificate {
    std::string theorem_id;
    std::vector<PatternSpec> class_spec;
    int p = 0;
    int omega = 0;
    long long claimed_bound = 0;
    int colors_used = 0;
    bool precondition_met = false;
    /// Branch or proof case that produced the colouring.
    std::string branch;
    /// Best known lower bound for the class at this ω, when one is known (G* family).
    std::optional<long long> lower_bound;
};

struct ColorResult {
    Coloring coloring;
    BoundCertificate certificate;
};

/// A colourer refused its input. `check` names the failed precondition; `witness`
/// holds the forbidden occurrence when freeness was the problem.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string check, std::optional<Occurrence> witness)
        : std::runtime_error("precondition failed: " + check), check_(std::move(check)), witness_(std::move(witness)) {}
    const std::string& check() const { return check_; }
    const std::optional<Occurrence>& witness() const { return witness_; }

private:
    std::string check_;
    std::optional<Occurrence> witness_;
};

// Colour budgets of the individual theorems.
long long cubic_bound(int omega);
/// ω + Σ_{j=2..ω} (j-1)(ω-j+2): the palette count of the partition colouring.
long long partition_budget(int omega);
long long k1k2kp_any_bound(int omega, int p);
long long two_k1_kp_bound(int omega, int p);
long long diamond_bound(int omega);

/// (P3 ∪ P2)-free: U_k gets colour k, every C_{i,j} a fresh palette of ω-j+2 colours.
ColorResult color_general_p3p2(const Graph& g);
/// {P3 ∪ P2, (K1 ∪ K2)+Kp}-free with ω >= max(3, 3p-1): at most ω+p-1 colours.
ColorResult color_k1k2kp(const Graph& g, int p);
/// {P3 ∪ P2, (K1 ∪ K2)+Kp}-free, p >= 2, ω >= 3: the piecewise linear bound.
ColorResult color_k1k2kp_any(const Graph& g, int p);
/// {P3 ∪ P2, HVN}-free with ω >= 4: at most ω+1 colours.
ColorResult color_hvn(const Graph& g);
/// {P3 ∪ P2, 2K1+Kp}-free, p >= 2.
ColorResult color_2k1kp(const Graph& g, int p);
/// {P3 ∪ P2, diamond}-free: 4, 6, 4, ω colours for ω = 2, 3, 4, >= 5.
ColorResult color_diamond(const Graph& g);
/// Picks the applicable theorem with the smallest budget; never throws on valid graphs.
ColorResult auto_color(const Graph& g);

/// Runs the colourer named by `theorem` ("auto", "general", "k1k2kp:<p>",
/// "k1k2kp-any:<p>", "hvn", "2k1kp:<p>", "diamond").
ColorResult color_with(const Graph& g, const std::string& theorem);

}  // namespace chibind
