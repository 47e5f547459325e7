#include "chibind/colorers.hpp"

#include "chibind/decompose.hpp"
#include "chibind/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace chibind {

long long cubic_bound(int omega) {
    const long long w = omega;
    return w * (w + 1) * (w + 2) / 6;
}

long long partition_budget(int omega) {
    long long total = omega;
    for (int j = 2; j <= omega; ++j) total += static_cast<long long>(j - 1) * (omega - j + 2);
    return total;
}

namespace {

// Σ_{j=from..to} (j-1)(p-j+3)
long long level_sum(int from, int to, int p) {
    long long s = 0;
    for (int j = from; j <= to; ++j) s += static_cast<long long>(j - 1) * (p - j + 3);
    return s;
}

// Last level that gets fresh colours when ω = p+2+k; levels above it share the V1 palette.
int fresh_cutoff(int omega, int p) {
    if (omega == 3 * p - 2) return 2;
    return p - (omega - p - 2) / 2;
}

}  // namespace

long long k1k2kp_any_bound(int omega, int p) {
    if (p < 2 || omega < 3) throw std::invalid_argument("k1k2kp-any bound needs p >= 2 and omega >= 3");
    if (omega >= 3 * p - 1) return omega + p - 1;
    if (omega == 3 * p - 2) return omega + 4LL * p - 3;
    if (omega >= p + 2) return omega + 7LL * (p - 1) + level_sum(4, fresh_cutoff(omega, p), p);
    return omega + level_sum(2, p + 1, p);
}

long long two_k1_kp_bound(int omega, int p) {
    if (p < 2) throw std::invalid_argument("2k1kp bound needs p >= 2");
    if (omega <= 2) return cubic_bound(omega);
    if (omega >= 3 * p - 1) return omega;
    if (omega == 3 * p - 2) return omega + 2LL * p - 1;
    if (omega >= p + 2) return omega + 2LL * p - 1 + level_sum(3, fresh_cutoff(omega, p), p);
    return omega + level_sum(2, p + 1, p);
}

long long diamond_bound(int omega) {
    switch (omega) {
    case 0: return 0;
    case 1: return 1;
    case 2: return 4;
    case 3: return 6;
    case 4: return 4;
    default: return omega;
    }
}

namespace {

std::vector<std::vector<int>> components(const Graph& g, const VertexSet& s) {
    std::vector<std::vector<int>> out;
    VertexSet left = s;
    for (int root = left.first(); root >= 0; root = left.first()) {
        std::vector<int> comp{root};
        left.erase(root);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            VertexSet reach = g.neighbors(comp[head]) & left;
            reach.for_each([&](int x) {
                comp.push_back(x);
                left.erase(x);
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet as_set(int n, const std::vector<int>& vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c) out.push_back(c);
    return out;
}

class Painter {
public:
    explicit Painter(const Graph& g) : g_(g), colors_(static_cast<std::size_t>(g.order()), 0) {}

    int color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
    void paint(int v, int c) { colors_[static_cast<std::size_t>(v)] = c; }
    void paint_all(const VertexSet& s, int c) {
        s.for_each([&](int v) { paint(v, c); });
    }
    void clear(const VertexSet& s) { paint_all(s, 0); }

    bool clashes(int v, int c) const {
        bool hit = false;
        g_.neighbors(v).for_each([&](int u) { hit = hit || color(u) == c; });
        return hit;
    }

    int first_fit(int v, int lo, int hi) const {
        for (int c = lo; c <= hi; ++c)
            if (!clashes(v, c)) return c;
        return 0;
    }

    // Kuhn matching of clique vertices to palette colours not used by painted neighbours.
    bool list_color_clique(const std::vector<int>& clique, const std::vector<int>& palette) {
        if (clique.size() > palette.size()) return false;
        std::vector<std::vector<int>> allowed(clique.size());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t c = 0; c < palette.size(); ++c)
                if (!clashes(clique[i], palette[c])) allowed[i].push_back(static_cast<int>(c));
        std::vector<int> owner(palette.size(), -1);
        std::vector<char> seen;
        std::function<bool(int)> augment = [&](int i) {
            for (int c : allowed[static_cast<std::size_t>(i)]) {
                if (seen[static_cast<std::size_t>(c)]) continue;
                seen[static_cast<std::size_t>(c)] = 1;
                if (owner[static_cast<std::size_t>(c)] < 0 || augment(owner[static_cast<std::size_t>(c)])) {
                    owner[static_cast<std::size_t>(c)] = i;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < clique.size(); ++i) {
            seen.assign(palette.size(), 0);
            if (!augment(static_cast<int>(i))) return false;
        }
        for (std::size_t c = 0; c < palette.size(); ++c)
            if (owner[c] >= 0) paint(clique[static_cast<std::size_t>(owner[c])], palette[c]);
        return true;
    }

    // Backtracking list colouring for components that are not cliques.
    bool list_color_general(const std::vector<int>& vs, const std::vector<int>& palette) {
        std::uint64_t nodes = 0;
        std::function<bool(std::size_t)> go = [&](std::size_t i) {
            if (i == vs.size()) return true;
            if (++nodes > 2'000'000) return false;
            for (int c : palette) {
                if (clashes(vs[i], c)) continue;
                paint(vs[i], c);
                if (go(i + 1)) return true;
                paint(vs[i], 0);
            }
            return false;
        };
        return go(0);
    }

    bool list_color(const VertexSet& s, const std::vector<int>& palette) {
        for (const auto& comp : components(g_, s)) {
            const bool ok = is_clique(g_, as_set(g_.order(), comp)) ? list_color_clique(comp, palette)
                                                                     : list_color_general(comp, palette);
            if (!ok) return false;
        }
        return true;
    }

    // First-fit from `first` upwards; returns how many colours above first-1 were needed.
    int fresh(const VertexSet& s, int first) {
        int width = 0;
        for (const auto& comp : components(g_, s))
            for (int v : comp) {
                int c = first;
                while (clashes(v, c)) ++c;
                paint(v, c);
                width = std::max(width, c - first + 1);
            }
        return width;
    }

    // First-fit inside 1..hi; throws when the palette is exhausted.
    void first_fit_all(const VertexSet& s, int hi, const char* where) {
        for (const auto& comp : components(g_, s))
            for (int v : comp) {
                const int c = first_fit(v, 1, hi);
                if (c == 0) throw std::logic_error(std::string("first-fit ran out of colours in ") + where);
                paint(v, c);
            }
    }

    const std::vector<int>& colors() const { return colors_; }

private:
    const Graph& g_;
    std::vector<int> colors_;
};

BoundCertificate make_cert(std::string theorem, std::vector<PatternSpec> specs, int p, int omega, long long bound,
                           std::string branch) {
    BoundCertificate c;
    c.theorem_id = std::move(theorem);
    c.class_spec = std::move(specs);
    c.p = p;
    c.omega = omega;
    c.claimed_bound = bound;
    c.precondition_met = true;
    c.branch = std::move(branch);
    return c;
}

ColorResult finish(const Graph& g, const Painter& painter, BoundCertificate cert) {
    for (int v = 0; v < g.order(); ++v)
        if (painter.color(v) <= 0)
            throw std::logic_error(cert.theorem_id + ": vertex " + std::to_string(v) + " left uncoloured");
    Coloring c = compact(painter.colors());
    if (!is_proper(g, c)) throw std::logic_error(cert.theorem_id + " (" + cert.branch + ") produced an improper colouring");
    cert.colors_used = c.colors_used();
    return {std::move(c), std::move(cert)};
}

ColorResult empty_result(BoundCertificate cert) {
    cert.claimed_bound = 0;
    cert.colors_used = 0;
    cert.branch = "empty graph";
    return {Coloring{{}, 0}, std::move(cert)};
}

std::string list_name(const std::vector<PatternSpec>& specs) {
    std::string s = "{";
    for (std::size_t i = 0; i < specs.size(); ++i) s += (i ? ", " : "") + to_string(specs[i]);
    return s + "}";
}

void require_free(const Graph& g, const std::vector<PatternSpec>& specs) {
    if (auto occ = first_occurrence(g, specs)) throw PreconditionError("graph is not " + list_name(specs) + "-free", occ);
}

void require_empty_independents(const WagonPartition& part, const char* theorem) {
    for (int k = 1; k <= part.omega(); ++k)
        if (!part.I(k).empty())
            throw std::logic_error(std::string(theorem) + ": I_" + std::to_string(k) + " is not empty");
}

void require_empty_above(const WagonPartition& part, int level, const char* theorem) {
    for (int j = level + 1; j <= part.omega(); ++j)
        if (!part.level(j).empty())
            throw std::logic_error(std::string(theorem) + ": level " + std::to_string(j) + " is not empty");
}

void paint_wagons(Painter& painter, const WagonPartition& part) {
    for (int k = 1; k <= part.omega(); ++k) painter.paint_all(part.U(k), k);
}

std::vector<int> colors_of(const Painter& painter, const std::vector<int>& vs) {
    std::vector<int> out;
    for (int v : vs) out.push_back(painter.color(v));
    std::sort(out.begin(), out.end());
    return out;
}

// A is already painted 1..ω. S is the lex-least maximum clique of `part`; S together
// with `rest` must be a clique, which is list-coloured from 1..ω; the other components
// of `part` then reuse the colours of S.
void color_around_clique(const Graph& g, Painter& painter, const VertexSet& part, const VertexSet& rest, int omega,
                         const char* theorem) {
    const std::vector<int> s = lex_least_maximum_clique(g, part);
    VertexSet joined = rest | as_set(g.order(), s);
    if (!is_clique(g, joined)) throw std::logic_error(std::string(theorem) + ": S and the rest of V2 do not form a clique");
    if (!painter.list_color_clique(joined.to_vector(), range(1, omega)))
        throw std::logic_error(std::string(theorem) + ": no list colouring of the big clique");
    const std::vector<int> palette = colors_of(painter, s);
    if (!painter.list_color(part - as_set(g.order(), s), palette))
        throw std::logic_error(std::string(theorem) + ": components beside S could not reuse its colours");
}

const std::vector<PatternSpec> kP3P2 = {PatternSpec::p3p2()};

}  // namespace

ColorResult color_general_p3p2(const Graph& g) {
    require_free(g, kP3P2);
    auto cert = make_cert("general", kP3P2, 0, 0, 0, "partition");
    if (g.order() == 0) return empty_result(cert);
    const auto part = wagon_partition(g);
    const int w = part.omega();
    cert.omega = w;
    cert.claimed_bound = cubic_bound(w);

    Painter painter(g);
    paint_wagons(painter, part);
    int next = w + 1;
    for (int j = 2; j <= w; ++j)
        for (int i = 1; i < j; ++i) {
            const int width = painter.fresh(part.C(i, j), next);
            if (width > w - j + 2) throw std::logic_error("general: C_{i,j} needs more than ω-j+2 colours");
            next += w - j + 2;
        }
    return finish(g, painter, cert);
}

ColorResult color_k1k2kp(const Graph& g, int p) {
    if (p < 1) throw PreconditionError("p >= 1", std::nullopt);
    const std::vector<PatternSpec> specs = {PatternSpec::p3p2(), PatternSpec::k1k2_kp(p)};
    require_free(g, specs);
    const int w = clique_number(g).value;
    if (w < std::max(3, 3 * p - 1))
        throw PreconditionError("omega >= max(3, 3p-1), got omega = " + std::to_string(w), std::nullopt);
    auto cert = make_cert("k1k2kp", specs, p, w, w + p - 1, "omega>=3p-1");
    cert.lower_bound = w + p / 2;  // ω + ⌈(p-1)/2⌉

    const auto part = wagon_partition(g);
    Painter painter(g);
    paint_wagons(painter, part);
    painter.first_fit_all(part.V2(), w + p - 1, "k1k2kp");
    return finish(g, painter, cert);
}

ColorResult color_k1k2kp_any(const Graph& g, int p) {
    if (p < 2) throw PreconditionError("p >= 2", std::nullopt);
    const std::vector<PatternSpec> specs = {PatternSpec::p3p2(), PatternSpec::k1k2_kp(p)};
    require_free(g, specs);
    const int w = clique_number(g).value;
    if (w < 3) throw PreconditionError("omega >= 3, got omega = " + std::to_string(w), std::nullopt);

    if (w >= 3 * p - 1) {
        auto r = color_k1k2kp(g, p);
        r.certificate.theorem_id = "k1k2kp-any";
        return r;
    }
    std::string branch;
    int cutoff = 0;
    if (w <= p + 1) {
        branch = "3<=omega<=p+1";
        cutoff = w;
    } else if (w == 3 * p - 2) {
        branch = "omega=3p-2";
        cutoff = 2;
    } else {
        branch = "omega=p+2+k";
        cutoff = fresh_cutoff(w, p);
    }
    auto cert = make_cert("k1k2kp-any", specs, p, w, k1k2kp_any_bound(w, p), branch);
    cert.lower_bound = w + p / 2;

    const auto part = wagon_partition(g);
    Painter painter(g);
    paint_wagons(painter, part);
    VertexSet tail(g.order());
    for (int j = cutoff + 1; j <= w; ++j) tail |= part.level(j);
    painter.first_fit_all(tail, w + p - 1, "k1k2kp-any tail");
    int next = w + p;
    for (int j = 2; j <= cutoff; ++j)
        for (int i = 1; i < j; ++i) next += painter.fresh(part.C(i, j), next);
    return finish(g, painter, cert);
}

ColorResult color_hvn(const Graph& g) {
    const std::vector<PatternSpec> specs = {PatternSpec::p3p2(), PatternSpec::hvn()};
    require_free(g, specs);
    const int w = clique_number(g).value;
    if (w < 4) throw PreconditionError("omega >= 4, got omega = " + std::to_string(w), std::nullopt);
    if (w >= 5) {
        auto r = color_k1k2kp(g, 2);
        r.certificate.theorem_id = "hvn";
        r.certificate.class_spec = specs;
        r.certificate.p = 0;
        r.certificate.branch = "omega>=5";
        r.certificate.lower_bound.reset();
        return r;
    }

    const auto part = wagon_partition(g);
    require_empty_above(part, 3, "hvn");
    Painter painter(g);
    paint_wagons(painter, part);
    const VertexSet &c12 = part.C(1, 2), &c13 = part.C(1, 3), &c23 = part.C(2, 3);
    auto fail = [](const std::string& what) { throw std::logic_error("hvn: " + what); };
    std::string branch;

    auto has_edge = [&](const VertexSet& s) { return !is_independent(g, s); };
    auto case_two_one = [&] {
        painter.paint_all(c13, 3);
        painter.paint_all(c23, 4);
        if (!painter.list_color(c12, {1, 2, 5})) fail("C_{1,2} not colourable from {1,2,5}");
    };

    int edged = has_edge(c23) ? 2 : has_edge(c13) ? 1 : 0;
    if (edged) {
        const int i = edged, k = 3 - edged;
        branch = "case 1";
        const VertexSet& ci3 = part.C(i, 3);
        const VertexSet& ck3 = part.C(k, 3);
        painter.paint_all(c12, 5);
        painter.paint_all(ck3, k);
        if (!painter.list_color(ci3, {i, 3, 4})) fail("C_{i,3} not colourable from {i,3,4}");
    } else if (!has_edge(c12)) {
        branch = "case 2.1 (no edges in V2)";
        case_two_one();
    } else {
        const int s = clique_number_within(g, c12);
        int k = 0;
        for (int l = 1; l <= 4 && k == 0; ++l)
            if (!part.I(l).empty()) k = l;
        if (s == 2) {
            branch = "case 2.1";
            case_two_one();
        } else if (s == 3) {
            branch = "case 2.2";
            if (k == 0) {
                case_two_one();
            } else {
                if (k == 1) {
                    painter.paint_all(c13, k);
                    painter.paint_all(c23, 5);
                } else {
                    painter.paint_all(c23, k);
                    painter.paint_all(c13, 5);
                }
                std::vector<int> palette;
                for (int c = 1; c <= 4; ++c)
                    if (c != k) palette.push_back(c);
                if (!painter.list_color(c12, palette)) fail("case 2.2 C_{1,2} list colouring failed");
            }
        } else {
            branch = "case 2.3";
            const VertexSet rest = c13 | c23;
            std::vector<int> palette;
            if (k == 0) {
                painter.paint_all(rest, 4);
                palette = {1, 2, 3, 5};
            } else if (k >= 3) {
                painter.paint_all(rest, k);
                for (int c = 1; c <= 5; ++c)
                    if (c != k) palette.push_back(c);
            } else {
                painter.paint_all(rest, 5);
                palette = {1, 2, 3, 4};
            }
            if (!painter.list_color(c12, palette)) fail("case 2.3 C_{1,2} list colouring failed");
        }
    }
    return finish(g, painter, make_cert("hvn", specs, 0, w, w + 1, branch));
}

namespace {

// Shared by the 2K1+Kp and diamond colourers. I_k is empty once ω > p; below that U_k
// still takes colour k.
ColorResult two_k1_kp_core(const Graph& g, int p, const std::vector<PatternSpec>& specs, const std::string& theorem) {
    const auto part = wagon_partition(g);
    const int w = part.omega();
    if (w > p) require_empty_independents(part, theorem.c_str());
    Painter painter(g);
    paint_wagons(painter, part);

    if (w >= 3 * p - 1) {
        if (!painter.list_color(part.V2(), range(1, w))) throw std::logic_error(theorem + ": V2 list colouring failed");
        return finish(g, painter, make_cert(theorem, specs, p, w, w, "omega>=3p-1"));
    }
    const VertexSet& c12 = part.C(1, 2);
    if (clique_number_within(g, c12) >= 2 * p) {
        color_around_clique(g, painter, c12, part.V2() - c12, w, theorem.c_str());
        return finish(g, painter, make_cert(theorem, specs, p, w, w, "omega(C12)>=2p"));
    }

    const int cutoff = w <= p + 1 ? w : fresh_cutoff(w, p);
    const std::string branch = w <= p + 1 ? "3<=omega<=p+1" : w == 3 * p - 2 ? "omega=3p-2" : "omega=p+2+k";
    auto cert = make_cert(theorem, specs, p, w, two_k1_kp_bound(w, p), branch);

    int big = 0;
    if (w > p + 1 && cutoff >= 3)
        for (int i = 1; i <= 2 && big == 0; ++i)
            if (clique_number_within(g, part.C(i, 3)) >= 2 * p) big = i;

    if (big) {
        cert.branch += ", omega(C_{i,3})>=2p";
        const VertexSet& ci3 = part.C(big, 3);
        color_around_clique(g, painter, ci3, part.V2() - c12 - ci3, w, theorem.c_str());
        painter.fresh(c12, w + 1);
        return finish(g, painter, cert);
    }

    VertexSet tail(g.order());
    for (int j = cutoff + 1; j <= w; ++j) tail |= part.level(j);
    if (!painter.list_color(tail, range(1, w))) throw std::logic_error(theorem + ": tail list colouring failed");
    int next = w + 1;
    for (int j = 2; j <= cutoff; ++j)
        for (int i = 1; i < j; ++i) next += painter.fresh(part.C(i, j), next);
    return finish(g, painter, cert);
}

// Extends a precoloured maximum clique to the whole graph within `palette` colours.
// Most-constrained vertex first with forward checking on colour domains.
bool extend_within(const Graph& g, Painter& painter, int palette, std::uint64_t node_cap) {
    const int n = g.order();
    std::vector<std::uint32_t> banned(static_cast<std::size_t>(n), 0);
    std::vector<int> open;
    for (int v = 0; v < n; ++v) {
        if (painter.color(v) != 0) continue;
        open.push_back(v);
        g.neighbors(v).for_each([&](int u) {
            if (painter.color(u) > 0) banned[static_cast<std::size_t>(v)] |= 1u << painter.color(u);
        });
    }
    const std::uint32_t all = ((1u << (palette + 1)) - 1) & ~1u;
    std::uint64_t nodes = 0;

    std::function<bool(std::size_t)> go = [&](std::size_t depth) {
        if (depth == open.size()) return true;
        if (++nodes > node_cap) return false;
        std::size_t pick = depth;
        int best = 64;
        for (std::size_t i = depth; i < open.size(); ++i) {
            const int room = std::popcount(all & ~banned[static_cast<std::size_t>(open[i])]);
            if (room < best) {
                best = room;
                pick = i;
            }
        }
        if (best == 0) return false;
        std::swap(open[depth], open[pick]);
        const int v = open[depth];
        const std::uint32_t choices = all & ~banned[static_cast<std::size_t>(v)];
        for (int c = 1; c <= palette; ++c) {
            if (!(choices >> c & 1u)) continue;
            std::vector<int> touched;
            bool wiped = false;
            g.neighbors(v).for_each([&](int u) {
                if (painter.color(u) != 0 || (banned[static_cast<std::size_t>(u)] >> c & 1u)) return;
                banned[static_cast<std::size_t>(u)] |= 1u << c;
                touched.push_back(u);
                if ((all & ~banned[static_cast<std::size_t>(u)]) == 0) wiped = true;
            });
            painter.paint(v, c);
            if (!wiped && go(depth + 1)) return true;
            painter.paint(v, 0);
            for (int u : touched) banned[static_cast<std::size_t>(u)] &= ~(1u << c);
        }
        std::swap(open[depth], open[pick]);
        return false;
    };
    return go(0);
}

}  // namespace

ColorResult color_2k1kp(const Graph& g, int p) {
    if (p < 2) throw PreconditionError("p >= 2", std::nullopt);
    const std::vector<PatternSpec> specs = {PatternSpec::p3p2(), PatternSpec::two_k1_kp(p)};
    require_free(g, specs);
    if (g.order() == 0) return empty_result(make_cert("2k1kp", specs, p, 0, 0, ""));
    const int w = clique_number(g).value;
    if (w <= 2) {
        auto r = color_general_p3p2(g);
        r.certificate.theorem_id = "2k1kp";
        r.certificate.class_spec = specs;
        r.certificate.p = p;
        r.certificate.branch = "omega<=2";
        return r;
    }
    return two_k1_kp_core(g, p, specs, "2k1kp");
}

ColorResult color_diamond(const Graph& g) {
    const std::vector<PatternSpec> specs = {PatternSpec::p3p2(), PatternSpec::diamond()};
    require_free(g, specs);
    if (g.order() == 0) return empty_result(make_cert("diamond", specs, 0, 0, 0, ""));
    const int w = clique_number(g).value;
    if (w <= 2) {
        auto r = color_general_p3p2(g);
        r.certificate.theorem_id = "diamond";
        r.certificate.class_spec = specs;
        r.certificate.claimed_bound = diamond_bound(w);
        r.certificate.branch = w == 1 ? "omega=1" : "omega=2";
        return r;
    }
    if (w >= 5) {
        auto r = two_k1_kp_core(g, 2, specs, "diamond");
        r.certificate.p = 0;
        r.certificate.branch = "omega>=5";
        return r;
    }

    const auto part = wagon_partition(g);
    require_empty_independents(part, "diamond");
    Painter painter(g);
    paint_wagons(painter, part);

    if (w == 3) {
        if (!extend_within(g, painter, 6, 50'000'000)) throw std::logic_error("diamond: no 6-colouring extends A");
        return finish(g, painter, make_cert("diamond", specs, 0, w, 6, "omega=3"));
    }

    require_empty_above(part, 3, "diamond");
    const VertexSet &c12 = part.C(1, 2), &c13 = part.C(1, 3), &c23 = part.C(2, 3);
    const int s = clique_number_within(g, c12);
    std::string branch;
    auto fail = [](const std::string& what) { throw std::logic_error("diamond: " + what); };

    if (s == 4) {
        branch = "omega=4, |S|=4";
        color_around_clique(g, painter, c12, c13 | c23, 4, "diamond");
    } else if (s == 3) {
        branch = "omega=4, |S|=3";
        const std::vector<int> clique = lex_least_maximum_clique(g, c12);
        const VertexSet rest = c13 | c23;
        const VertexSet others = c12 - as_set(g.order(), clique);
        bool done = false;
        for (int q : {3, 4}) {
            painter.paint_all(rest, 7 - q);
            if (painter.list_color_clique(clique, {1, 2, q}) && painter.list_color(others, {1, 2, q})) {
                done = true;
                break;
            }
            painter.clear(c12);
            painter.clear(rest);
        }
        if (!done) fail("|S|=3 colouring failed for both choices of q");
    } else if (is_independent(g, c13) && is_independent(g, c23)) {
        branch = "omega=4, |S|<=2";
        painter.paint_all(c13, 3);
        painter.paint_all(c23, 4);
        if (!painter.list_color(c12, {1, 2})) fail("C_{1,2} not colourable from {1,2}");
    } else {
        branch = "omega=4, |S|<=2, edge in C_{i,3}";
        const int i = is_independent(g, c13) ? 2 : 1, k = 3 - i;
        if (!part.C(k, 3).empty()) fail("C_{k,3} is not empty");
        painter.paint_all(c12, k);
        if (!painter.list_color(part.C(i, 3), {i, 3, 4})) fail("C_{i,3} not colourable from {i,3,4}");
    }
    return finish(g, painter, make_cert("diamond", specs, 0, w, 4, branch));
}

namespace {

constexpr std::uint64_t kFallbackBudget = 100'000;

// Best colouring the exact search finds within a small node budget; DSATUR is greedy,
// so it never exceeds Δ+1.
ColorResult greedy_fallback(const Graph& g) {
    int max_degree = 0;
    for (int v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
    const OracleResult guided = chromatic_number(g, kFallbackBudget);
    Painter painter(g);
    for (int v = 0; v < g.order(); ++v) painter.paint(v, guided.witness[static_cast<std::size_t>(v)]);
    auto cert = make_cert("fallback-greedy", {}, 0, clique_number(g).value, max_degree + 1,
                          guided.exact() ? "dsatur (optimal)" : "dsatur");
    return finish(g, painter, cert);
}

constexpr int kMaxAutoP = 6;

}  // namespace

ColorResult auto_color(const Graph& g) {
    const int n = g.order();
    if (n == 0) return empty_result(make_cert("clique", {}, 0, 0, 0, ""));
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) {
        Painter painter(g);
        for (int v = 0; v < n; ++v) painter.paint(v, v + 1);
        return finish(g, painter, make_cert("clique", {}, 0, n, n, "complete graph"));
    }
    if (!is_free(g, kP3P2)) return greedy_fallback(g);

    const int w = clique_number(g).value;
    struct Candidate {
        long long bound;
        std::function<ColorResult()> run;
    };
    std::vector<Candidate> candidates;
    if (is_free(g, {PatternSpec::diamond()})) candidates.push_back({diamond_bound(w), [&] { return color_diamond(g); }});
    if (w >= 4 && is_free(g, {PatternSpec::hvn()})) candidates.push_back({w + 1LL, [&] { return color_hvn(g); }});
    const int top = std::min(kMaxAutoP, w + 1);
    for (int p = 2; p <= top; ++p)
        if (is_free(g, {PatternSpec::two_k1_kp(p)})) {
            candidates.push_back({two_k1_kp_bound(w, p), [&g, p] { return color_2k1kp(g, p); }});
            break;
        }
    for (int p = 1; p <= top; ++p) {
        if (!is_free(g, {PatternSpec::k1k2_kp(p)})) continue;
        if (w >= std::max(3, 3 * p - 1)) candidates.push_back({w + p - 1LL, [&g, p] { return color_k1k2kp(g, p); }});
        else if (p >= 2 && w >= 3) candidates.push_back({k1k2kp_any_bound(w, p), [&g, p] { return color_k1k2kp_any(g, p); }});
        break;
    }
    candidates.push_back({cubic_bound(w), [&] { return color_general_p3p2(g); }});

    const auto best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const Candidate& a, const Candidate& b) { return a.bound < b.bound; });
    return best->run();
}

ColorResult color_with(const Graph& g, const std::string& theorem) {
    auto with_p = [&](const std::string& prefix) -> std::optional<int> {
        if (theorem.rfind(prefix + ":", 0) != 0) return std::nullopt;
        const std::string digits = theorem.substr(prefix.size() + 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
            digits.size() > 6)
            throw std::invalid_argument("bad parameter in theorem '" + theorem + "'");
        return std::stoi(digits);
    };
    if (theorem == "auto") return auto_color(g);
    if (theorem == "general") return color_general_p3p2(g);
    if (theorem == "hvn") return color_hvn(g);
    if (theorem == "diamond") return color_diamond(g);
    if (auto p = with_p("k1k2kp")) return color_k1k2kp(g, *p);
    if (auto p = with_p("k1k2kp-any")) return color_k1k2kp_any(g, *p);
    if (auto p = with_p("2k1kp")) return color_2k1kp(g, *p);
    throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

}  // namespace chibind
