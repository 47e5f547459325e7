#include "chibind/oracles.hpp"

#include "chibind/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace chibind {

namespace {

// Greedy sequential colouring of `p` into independent classes; returns vertices in class
// order with bounds[i] = class index (1-based) of order[i].
void color_sort(const Graph& g, const VertexSet& p, std::vector<int>& order, std::vector<int>& bounds) {
    order.clear();
    bounds.clear();
    VertexSet uncolored = p;
    int k = 0;
    while (!uncolored.empty()) {
        ++k;
        VertexSet q = uncolored;
        while (!q.empty()) {
            int v = q.first();
            q.erase(v);
            q -= g.neighbors(v);
            uncolored.erase(v);
            order.push_back(v);
            bounds.push_back(k);
        }
    }
}

class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    std::vector<int> solve(const VertexSet& within) {
        best_.clear();
        current_.clear();
        if (!within.empty()) expand(within);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(VertexSet p) {
        ++nodes_;
        std::vector<int> order, bounds;
        color_sort(g_, p, order, bounds);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bounds[i]) <= best_.size()) return;
            const int v = order[i];
            current_.push_back(v);
            VertexSet next = p & g_.neighbors(v);
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            p.erase(v);
        }
    }

    const Graph& g_;
    std::vector<int> current_;
    std::vector<int> best_;
    std::uint64_t nodes_ = 0;
};

// Finds the lexicographically least clique of exactly `size` vertices in `cand`.
bool least_clique(const Graph& g, std::vector<int>& chosen, const VertexSet& cand, int size) {
    if (static_cast<int>(chosen.size()) == size) return true;
    const int need = size - static_cast<int>(chosen.size());
    if (cand.count() < need) return false;
    std::vector<int> order, bounds;
    color_sort(g, cand, order, bounds);
    if (bounds.empty() || bounds.back() < need) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
        VertexSet next = cand & g.neighbors(v);
        // keep only vertices after v so the sequence stays ascending
        for (int u = next.first(); u >= 0 && u < v; u = next.next(u + 1)) next.erase(u);
        chosen.push_back(v);
        if (least_clique(g, chosen, next, size)) return true;
        chosen.pop_back();
    }
    return false;
}

// ⌈n/α⌉ is added to the lower bound only up to this order; α can get expensive beyond.
constexpr int kAlphaBoundLimit = 80;

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::uint64_t budget)
        : g_(g), n_(g.order()), budget_(budget), color_(static_cast<std::size_t>(n_), 0),
          degree_(static_cast<std::size_t>(n_)) {
        for (int v = 0; v < n_; ++v) degree_[static_cast<std::size_t>(v)] = g.degree(v);
    }

    OracleResult run() {
        OracleResult res;
        if (n_ == 0) return res;

        const auto clique = MaxClique(g_).solve(g_.vertices());
        lower_ = static_cast<int>(clique.size());
        if (n_ <= kAlphaBoundLimit) {
            const Graph co = complement(g_);
            const int alpha = static_cast<int>(MaxClique(co).solve(co.vertices()).size());
            lower_ = std::max(lower_, (n_ + alpha - 1) / alpha);
        }
        best_colors_ = greedy_dsatur();
        best_ = *std::max_element(best_colors_.begin(), best_colors_.end());

        if (best_ > lower_) {
            const int cap = best_ + 1;
            counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(cap), 0);
            sat_.assign(static_cast<std::size_t>(n_), 0);
            // colouring the clique first removes colour-permutation symmetry
            int used = 0;
            for (int v : clique) assign(v, ++used);
            search(static_cast<int>(clique.size()), used);
        }

        res.status = aborted_ ? OracleStatus::indeterminate : OracleStatus::exact;
        res.value = best_;
        res.lower_bound = aborted_ ? lower_ : best_;
        res.witness = best_colors_;
        res.nodes_explored = nodes_;
        return res;
    }

private:
    int& count(int v, int c) { return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(best_cap()) + static_cast<std::size_t>(c)]; }
    int best_cap() const { return static_cast<int>(counts_.size() / static_cast<std::size_t>(n_)); }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        g_.neighbors(v).for_each([&](int u) {
            if (count(u, c)++ == 0) ++sat_[static_cast<std::size_t>(u)];
        });
    }
    void unassign(int v) {
        const int c = color_[static_cast<std::size_t>(v)];
        color_[static_cast<std::size_t>(v)] = 0;
        g_.neighbors(v).for_each([&](int u) {
            if (--count(u, c) == 0) --sat_[static_cast<std::size_t>(u)];
        });
    }

    int select() const {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            const auto sv = sat_[static_cast<std::size_t>(v)], sb = sat_[static_cast<std::size_t>(best)];
            if (sv > sb || (sv == sb && degree_[static_cast<std::size_t>(v)] > degree_[static_cast<std::size_t>(best)])) best = v;
        }
        return best;
    }

    void search(int colored, int used) {
        if (aborted_ || best_ == lower_) return;
        if (nodes_ >= budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        if (colored == n_) {
            best_ = used;
            best_colors_ = color_;
            return;
        }
        const int v = select();
        for (int c = 1; c <= used && used < best_; ++c) {
            if (count(v, c) != 0) continue;
            assign(v, c);
            search(colored + 1, used);
            unassign(v);
            if (aborted_ || best_ == lower_) return;
        }
        if (used + 1 < best_) {
            assign(v, used + 1);
            search(colored + 1, used + 1);
            unassign(v);
        }
    }

    std::vector<int> greedy_dsatur() const {
        std::vector<int> col(static_cast<std::size_t>(n_), 0);
        std::vector<VertexSet> seen(static_cast<std::size_t>(n_), VertexSet(n_ + 1));
        std::vector<int> sat(static_cast<std::size_t>(n_), 0);
        for (int step = 0; step < n_; ++step) {
            int v = -1;
            for (int u = 0; u < n_; ++u) {
                if (col[static_cast<std::size_t>(u)]) continue;
                if (v < 0 || sat[static_cast<std::size_t>(u)] > sat[static_cast<std::size_t>(v)] ||
                    (sat[static_cast<std::size_t>(u)] == sat[static_cast<std::size_t>(v)] &&
                     degree_[static_cast<std::size_t>(u)] > degree_[static_cast<std::size_t>(v)]))
                    v = u;
            }
            int c = 1;
            while (seen[static_cast<std::size_t>(v)].contains(c)) ++c;
            col[static_cast<std::size_t>(v)] = c;
            g_.neighbors(v).for_each([&](int u) {
                if (!seen[static_cast<std::size_t>(u)].contains(c)) {
                    seen[static_cast<std::size_t>(u)].insert(c);
                    ++sat[static_cast<std::size_t>(u)];
                }
            });
        }
        return col;
    }

    const Graph& g_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int lower_ = 0;
    int best_ = 0;
    std::vector<int> best_colors_;
    std::vector<int> color_;
    std::vector<int> counts_;
    std::vector<int> sat_;
    std::vector<int> degree_;
};

}  // namespace

OracleResult chromatic_number(const Graph& g, std::uint64_t node_budget) {
    OracleResult res = DsaturSearch(g, node_budget).run();
    if (!res.exact()) return res;
    // sanity relations: proper witness, χ >= ω, χ·α >= n
    const Coloring witness{res.witness, res.value};
    const int omega = clique_number(g).value;
    const int alpha = independence_number(g).value;
    if (!is_proper(g, witness) || res.value < omega || res.value * alpha < g.order())
        throw std::logic_error("chromatic_number: oracle sanity relation violated");
    return res;
}

OracleResult clique_number(const Graph& g) {
    MaxClique mc(g);
    OracleResult res;
    res.witness = mc.solve(g.vertices());
    res.value = static_cast<int>(res.witness.size());
    res.lower_bound = res.value;
    res.nodes_explored = mc.nodes();
    VertexSet s(g.order());
    for (int v : res.witness) s.insert(v);
    if (!is_clique(g, s)) throw std::logic_error("clique_number: witness is not a clique");
    return res;
}

OracleResult independence_number(const Graph& g) { return clique_number(complement(g)); }

std::vector<int> lex_least_maximum_clique(const Graph& g, const VertexSet& within) {
    const int omega = static_cast<int>(MaxClique(g).solve(within).size());
    std::vector<int> chosen;
    if (omega > 0 && !least_clique(g, chosen, within, omega))
        throw std::logic_error("lex_least_maximum_clique: no clique of the computed size");
    return chosen;
}

std::vector<int> lex_least_maximum_clique(const Graph& g) { return lex_least_maximum_clique(g, g.vertices()); }

int clique_number_within(const Graph& g, const VertexSet& within) {
    return static_cast<int>(MaxClique(g).solve(within).size());
}

bool is_perfect_small(const Graph& g) { return !odd_hole_or_antihole(g); }

}  // namespace chibind
