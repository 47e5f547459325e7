#include "chibind/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace chibind {

namespace {

bool has_p(PatternKind k) { return k == PatternKind::K1K2PlusKp || k == PatternKind::TwoK1PlusKp; }

bool has_n(PatternKind k) {
    return k == PatternKind::Complete || k == PatternKind::Cycle || k == PatternKind::Path;
}

bool optional_n(PatternKind k) { return k == PatternKind::OddHole || k == PatternKind::OddAntihole; }

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

// Backtracking embedding of a pattern as an induced subgraph. Pattern vertices are
// visited in `order`; candidates are narrowed by adjacency bitsets of earlier images.
class InducedMatcher {
public:
    InducedMatcher(const Graph& host, const Graph& pattern, const VertexSet& within, bool min_first)
        : host_(host), pattern_(pattern), within_(within), min_first_(min_first),
          image_(static_cast<std::size_t>(pattern.order()), -1) {
        order_ = search_order(pattern);
        twin_ = twin_classes(pattern);
        nonadj_.reserve(static_cast<std::size_t>(host.order()));
        for (int v = 0; v < host.order(); ++v) nonadj_.push_back(host.non_neighbors(v));
    }

    std::optional<std::vector<int>> run() {
        if (pattern_.order() > within_.count()) return std::nullopt;
        if (pattern_.order() == 0) return std::vector<int>{};
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    // Highest degree first, then greedily the vertex with most links into the chosen prefix.
    static std::vector<int> search_order(const Graph& h) {
        const int k = h.order();
        std::vector<int> order;
        std::vector<bool> taken(static_cast<std::size_t>(k), false);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < k; ++v) {
                if (taken[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order) links += h.adjacent(u, v) ? 1 : 0;
                int deg = h.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            taken[static_cast<std::size_t>(best)] = true;
            order.push_back(best);
        }
        return order;
    }

    // Roles with equal open or equal closed neighbourhoods are interchangeable, so their
    // images are forced to increase with the role index. Without this a missing K_k is
    // searched k! times over.
    static std::vector<int> twin_classes(const Graph& h) {
        const int k = h.order();
        std::vector<int> cls(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r) {
            cls[static_cast<std::size_t>(r)] = r;
            for (int s = 0; s < r; ++s) {
                VertexSet nr = h.neighbors(r), ns = h.neighbors(s);
                nr.erase(s);
                ns.erase(r);
                if (nr == ns) {
                    cls[static_cast<std::size_t>(r)] = cls[static_cast<std::size_t>(s)];
                    break;
                }
            }
        }
        return cls;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int role = order_[depth];
        VertexSet cand = within_;
        for (std::size_t d = 0; d < depth; ++d) {
            const int prev_role = order_[d];
            const int img = image_[static_cast<std::size_t>(prev_role)];
            cand &= pattern_.adjacent(role, prev_role) ? host_.neighbors(img) : nonadj_[static_cast<std::size_t>(img)];
            cand.erase(img);
        }
        int from = 0, below = host_.order();
        if (min_first_ && depth > 0) from = image_[static_cast<std::size_t>(order_[0])] + 1;
        for (std::size_t d = 0; d < depth; ++d) {
            const int other = order_[d];
            if (twin_[static_cast<std::size_t>(other)] != twin_[static_cast<std::size_t>(role)]) continue;
            const int img = image_[static_cast<std::size_t>(other)];
            if (other < role) from = std::max(from, img + 1);
            else below = std::min(below, img);
        }
        for (int v = cand.next(from); v >= 0 && v < below; v = cand.next(v + 1)) {
            image_[static_cast<std::size_t>(role)] = v;
            if (extend(depth + 1)) return true;
        }
        image_[static_cast<std::size_t>(role)] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    VertexSet within_;
    bool min_first_;
    std::vector<int> order_;
    std::vector<int> twin_;
    std::vector<int> image_;
    std::vector<VertexSet> nonadj_;
};

std::optional<std::vector<int>> induced_cycle(const Graph& g, int length, const VertexSet& within) {
    Graph c = Graph::cycle(length);
    return InducedMatcher(g, c, within, /*min_first=*/true).run();
}

}  // namespace

std::string to_string(const PatternSpec& s) {
    switch (s.kind) {
    case PatternKind::P3UnionP2: return "p3p2";
    case PatternKind::TwoK2: return "2k2";
    case PatternKind::Diamond: return "diamond";
    case PatternKind::Hvn: return "hvn";
    case PatternKind::Paw: return "paw";
    case PatternKind::K1K2PlusKp: return "k1k2+kp:" + std::to_string(s.p.value_or(-1));
    case PatternKind::TwoK1PlusKp: return "2k1+kp:" + std::to_string(s.p.value_or(-1));
    case PatternKind::Complete: return "k" + std::to_string(s.n.value_or(-1));
    case PatternKind::Cycle: return "c" + std::to_string(s.n.value_or(-1));
    case PatternKind::Path: return "p" + std::to_string(s.n.value_or(-1));
    case PatternKind::OddHole: return s.n ? "odd-hole:" + std::to_string(*s.n) : "odd-hole";
    case PatternKind::OddAntihole: return s.n ? "odd-antihole:" + std::to_string(*s.n) : "odd-antihole";
    }
    return "?";
}

PatternSpec parse_pattern(std::string_view text) {
    auto fail = [&] { return PatternError("unknown pattern '" + std::string(text) + "'"); };
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    std::string_view t = lower;

    auto with_suffix = [&](std::string_view prefix) -> std::optional<int> {
        if (!t.starts_with(prefix)) return std::nullopt;
        auto v = parse_int(t.substr(prefix.size()));
        if (!v) throw fail();
        return v;
    };

    PatternSpec spec;
    if (t == "p3p2" || t == "p3+p2" || t == "p3up2") spec = PatternSpec::p3p2();
    else if (t == "2k2") spec = PatternSpec::two_k2();
    else if (t == "diamond") spec = PatternSpec::diamond();
    else if (t == "hvn") spec = PatternSpec::hvn();
    else if (t == "paw") spec = PatternSpec::paw();
    else if (t == "odd-hole") spec = PatternSpec::odd_hole();
    else if (t == "odd-antihole") spec = PatternSpec::odd_antihole();
    else if (auto p = with_suffix("k1k2+kp:")) spec = PatternSpec::k1k2_kp(*p);
    else if (auto p2 = with_suffix("2k1+kp:")) spec = PatternSpec::two_k1_kp(*p2);
    else if (auto h = with_suffix("odd-hole:")) spec = {PatternKind::OddHole, {}, *h};
    else if (auto a = with_suffix("odd-antihole:")) spec = {PatternKind::OddAntihole, {}, *a};
    else if (t.size() > 1 && (t[0] == 'k' || t[0] == 'c' || t[0] == 'p')) {
        auto n = parse_int(t.substr(1));
        if (!n) throw fail();
        spec = t[0] == 'k' ? PatternSpec::complete(*n) : t[0] == 'c' ? PatternSpec::cycle(*n) : PatternSpec::path(*n);
    } else {
        throw fail();
    }
    validate(spec);
    return spec;
}

std::vector<PatternSpec> parse_pattern_list(std::string_view text) {
    std::vector<PatternSpec> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (item.empty()) throw PatternError("empty pattern name in list '" + std::string(text) + "'");
        out.push_back(parse_pattern(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void validate(const PatternSpec& s) {
    std::string name = to_string(PatternSpec{s.kind, {}, {}});
    if (has_p(s.kind) || has_n(s.kind)) {
        name = name.substr(0, name.find("-1"));
        if (name.ends_with(':')) name.pop_back();
    }
    if (has_p(s.kind)) {
        if (!s.p) throw PatternError(name + ": missing parameter p");
        if (*s.p < 0) throw PatternError(name + ": p must be non-negative");
    } else if (s.p) {
        throw PatternError(name + ": unexpected parameter p");
    }
    if (has_n(s.kind)) {
        if (!s.n) throw PatternError(name + ": missing size n");
        const int min_n = s.kind == PatternKind::Cycle ? 3 : 1;
        if (*s.n < min_n) throw PatternError(name + ": n must be at least " + std::to_string(min_n));
    } else if (optional_n(s.kind)) {
        if (s.n && (*s.n < 5 || *s.n % 2 == 0)) throw PatternError(name + ": length must be odd and at least 5");
    } else if (s.n) {
        throw PatternError(name + ": unexpected size n");
    }
}

Graph materialize(const PatternSpec& s) {
    validate(s);
    const Graph k1 = Graph::complete(1);
    const Graph k2 = Graph::complete(2);
    switch (s.kind) {
    case PatternKind::P3UnionP2: return disjoint_union(Graph::path(3), Graph::path(2));
    case PatternKind::TwoK2: return disjoint_union(k2, k2);
    case PatternKind::Diamond: return join(Graph::edgeless(2), k2);
    case PatternKind::Hvn: return join(disjoint_union(k1, k2), k2);
    case PatternKind::Paw: return join(disjoint_union(k1, k2), k1);
    case PatternKind::K1K2PlusKp: return join(disjoint_union(k1, k2), Graph::complete(*s.p));
    case PatternKind::TwoK1PlusKp: return join(Graph::edgeless(2), Graph::complete(*s.p));
    case PatternKind::Complete: return Graph::complete(*s.n);
    case PatternKind::Cycle: return Graph::cycle(*s.n);
    case PatternKind::Path: return Graph::path(*s.n);
    case PatternKind::OddHole:
        if (!s.n) throw PatternError("odd-hole is a family; give a length to materialize it");
        return Graph::cycle(*s.n);
    case PatternKind::OddAntihole:
        if (!s.n) throw PatternError("odd-antihole is a family; give a length to materialize it");
        return complement(Graph::cycle(*s.n));
    }
    throw PatternError("unhandled pattern kind");
}

bool verify_occurrence(const Graph& host, const Occurrence& occ) {
    const Graph h = materialize(occ.pattern);
    const auto& vs = occ.vertices;
    if (static_cast<int>(vs.size()) != h.order()) return false;
    for (std::size_t a = 0; a < vs.size(); ++a) {
        if (vs[a] < 0 || vs[a] >= host.order()) return false;
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            if (vs[a] == vs[b]) return false;
            if (host.adjacent(vs[a], vs[b]) != h.adjacent(static_cast<int>(a), static_cast<int>(b))) return false;
        }
    }
    return true;
}

std::optional<Occurrence> find_induced_within(const Graph& g, const PatternSpec& spec, const VertexSet& within) {
    validate(spec);
    if (spec.kind == PatternKind::OddHole || spec.kind == PatternKind::OddAntihole) {
        const bool anti = spec.kind == PatternKind::OddAntihole;
        const Graph& target = g;
        Graph comp;
        if (anti) comp = complement(g);
        const int lo = spec.n ? *spec.n : (anti ? 7 : 5);
        const int hi = spec.n ? *spec.n : within.count();
        for (int len = lo; len <= hi; len += 2) {
            if (auto img = induced_cycle(anti ? comp : target, len, within))
                return Occurrence{*img, PatternSpec{spec.kind, {}, len}};
        }
        return std::nullopt;
    }
    const Graph h = materialize(spec);
    const bool cyclic = spec.kind == PatternKind::Cycle;
    if (auto img = InducedMatcher(g, h, within, cyclic).run()) return Occurrence{*img, spec};
    return std::nullopt;
}

std::optional<Occurrence> find_induced(const Graph& g, const PatternSpec& spec) {
    return find_induced_within(g, spec, g.vertices());
}

std::optional<Occurrence> first_occurrence(const Graph& g, const std::vector<PatternSpec>& specs) {
    for (const auto& s : specs)
        if (auto occ = find_induced(g, s)) return occ;
    return std::nullopt;
}

bool is_free(const Graph& g, const std::vector<PatternSpec>& specs) { return !first_occurrence(g, specs); }

std::optional<Occurrence> odd_hole_or_antihole(const Graph& g) {
    const Graph comp = complement(g);
    const VertexSet all = g.vertices();
    for (int len = 5; len <= g.order(); len += 2) {
        if (auto img = induced_cycle(g, len, all)) return Occurrence{*img, PatternSpec{PatternKind::OddHole, {}, len}};
        if (len >= 7)
            if (auto img = induced_cycle(comp, len, all))
                return Occurrence{*img, PatternSpec{PatternKind::OddAntihole, {}, len}};
    }
    return std::nullopt;
}

bool is_complete_multipartite(const Graph& g) {
    return !find_induced(complement(g), PatternSpec::path(3));
}

}  // namespace chibind
