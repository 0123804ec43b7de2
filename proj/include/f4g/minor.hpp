#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace f4g {

struct DeleteComponent {
    int index = 0;  // position in components() of the current graph
    friend bool operator==(const DeleteComponent&, const DeleteComponent&) = default;
};

using MinorStep = std::variant<SmoothingChoice, DeleteComponent>;

// Smoothings first, then component deletions; vertex and component indices
// refer to the graph as it stands when the step is applied.
struct MinorWitness {
    std::vector<MinorStep> steps;
    std::string source_fingerprint;
    std::string target_fingerprint;
};

inline FramedFourGraph apply_step(const FramedFourGraph& g, const MinorStep& step) {
    if (const auto* s = std::get_if<SmoothingChoice>(&step)) return smooth(g, *s);
    return delete_component(g, std::get<DeleteComponent>(step).index);
}

inline FramedFourGraph replay(FramedFourGraph g, const std::vector<MinorStep>& steps) {
    for (const auto& step : steps) g = apply_step(g, step);
    return g;
}

inline bool verify_minor_witness(const FramedFourGraph& host, const FramedFourGraph& pattern, const MinorWitness& w) {
    try {
        return is_isomorphic(replay(host, w.steps), pattern);
    } catch (const std::exception&) {
        return false;
    }
}

inline int smoothing_count(const MinorWitness& w) {
    return static_cast<int>(std::count_if(w.steps.begin(), w.steps.end(),
                                          [](const MinorStep& s) { return std::holds_alternative<SmoothingChoice>(s); }));
}

inline std::vector<std::pair<SmoothingChoice, FramedFourGraph>> all_smoothings(const FramedFourGraph& g) {
    std::vector<std::pair<SmoothingChoice, FramedFourGraph>> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (Pairing p : {Pairing::A, Pairing::B}) {
            const SmoothingChoice c{v, p};
            out.emplace_back(c, smooth(g, c));
        }
    return out;
}

// Deletions that leave exactly a copy of `pattern` in `g`, if its components
// form a sub-multiset of g's components. Indices are emitted in descending
// order so each stays valid as earlier ones are applied.
inline std::optional<std::vector<MinorStep>> deletions_to(const FramedFourGraph& g, const FramedFourGraph& pattern) {
    const auto host_parts = components(g);
    const auto pattern_parts = components(pattern);
    if (pattern_parts.size() > host_parts.size()) return std::nullopt;
    std::vector<CanonicalCode> host_codes;
    for (const auto& c : host_parts) host_codes.push_back(canonical_code(c));
    std::vector<bool> taken(host_parts.size(), false);
    for (const auto& p : pattern_parts) {
        const auto code = canonical_code(p);
        bool found = false;
        for (std::size_t i = 0; i < host_parts.size() && !found; ++i)
            if (!taken[i] && host_codes[i] == code) found = taken[i] = true;
        if (!found) return std::nullopt;
    }
    std::vector<MinorStep> out;
    for (int i = static_cast<int>(host_parts.size()) - 1; i >= 0; --i)
        if (!taken[i]) out.push_back(DeleteComponent{i});
    return out;
}

// Breadth-first search over all graphs reachable by smoothings, memoized by
// canonical form; the first hit gives a witness with the fewest smoothings.
inline std::optional<MinorWitness> has_minor(const FramedFourGraph& g, const FramedFourGraph& pattern) {
    struct Node {
        FramedFourGraph graph;
        int parent;
        SmoothingChoice step;
    };
    std::vector<Node> nodes{{g, -1, {}}};
    std::unordered_map<CanonicalCode, int, CodeHash> seen{{canonical_code(g), 0}};
    const int floor = pattern.vertex_count();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (auto dels = deletions_to(nodes[i].graph, pattern)) {
            MinorWitness w;
            for (int at = static_cast<int>(i); nodes[at].parent >= 0; at = nodes[at].parent) w.steps.push_back(nodes[at].step);
            std::reverse(w.steps.begin(), w.steps.end());
            w.steps.insert(w.steps.end(), dels->begin(), dels->end());
            w.source_fingerprint = fingerprint(g);
            w.target_fingerprint = fingerprint(pattern);
            return w;
        }
        if (nodes[i].graph.vertex_count() <= floor) continue;
        for (auto& [choice, child] : all_smoothings(nodes[i].graph)) {
            auto code = canonical_code(child);
            if (seen.contains(code)) continue;
            seen.emplace(std::move(code), static_cast<int>(nodes.size()));
            nodes.push_back({std::move(child), static_cast<int>(i), choice});
        }
    }
    return std::nullopt;
}

// Every minor of g up to isomorphism (g included), one representative each.
inline std::vector<FramedFourGraph> minor_closure(const FramedFourGraph& g) {
    std::vector<FramedFourGraph> out{g};
    std::unordered_map<CanonicalCode, int, CodeHash> seen{{canonical_code(g), 0}};
    auto add = [&](FramedFourGraph h) {
        auto code = canonical_code(h);
        if (seen.contains(code)) return;
        seen.emplace(std::move(code), 0);
        out.push_back(std::move(h));
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        const FramedFourGraph cur = out[i];
        for (auto& [choice, child] : all_smoothings(cur)) add(std::move(child));
        const int parts = component_count(cur);
        for (int c = 0; c < parts && parts > 1; ++c) add(delete_component(cur, c));
        if (parts == 1 && !cur.empty()) add(FramedFourGraph{});
    }
    return out;
}

// Memoized ground truth for "which of these connected patterns occur as
// minors". The table is keyed by canonical codes of connected graphs and only
// grows, so one oracle can serve a whole enumeration run.
class MinorOracle {
public:
    explicit MinorOracle(std::vector<FramedFourGraph> patterns) : patterns_(std::move(patterns)) {
        if (patterns_.size() > 32) throw std::invalid_argument("MinorOracle: at most 32 patterns");
        for (const auto& p : patterns_) {
            if (!is_connected(p)) throw std::invalid_argument("MinorOracle: patterns must be connected");
            codes_.push_back(canonical_code(p));
        }
    }

    // Bit i set iff patterns[i] is a minor of g.
    std::uint32_t profile(const FramedFourGraph& g) {
        std::uint32_t mask = 0;
        for (const auto& c : components(g)) mask |= connected_profile(c);
        return mask;
    }

    bool contains(const FramedFourGraph& g, int pattern) { return (profile(g) >> pattern) & 1u; }

    std::size_t memo_size() const { return memo_.size(); }

private:
    std::uint32_t connected_profile(const FramedFourGraph& c) {
        auto code = canonical_code(c);
        if (auto it = memo_.find(code); it != memo_.end()) return it->second;
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < codes_.size(); ++i)
            if (codes_[i] == code) mask |= 1u << i;
        for (int v = 0; v < c.vertex_count(); ++v)
            for (Pairing p : {Pairing::A, Pairing::B}) mask |= profile(smooth(c, {v, p}));
        memo_.emplace(std::move(code), mask);
        return mask;
    }

    std::vector<FramedFourGraph> patterns_;
    std::vector<CanonicalCode> codes_;
    std::unordered_map<CanonicalCode, std::uint32_t, CodeHash> memo_;
};

// An s-minor: some vertices are first split into two touching passes (a
// smoothing, recorded like the smoothings of a minor witness); then an
// even-valency edge subset of the smoothed graph is kept, valency-0 vertices
// are dropped, valency-2 vertices suppressed, and components deleted.
struct SMinorWitness {
    std::vector<SmoothingChoice> smoothings;
    std::vector<int> kept_edges;           // indices into edges() of the smoothed graph
    std::vector<int> suppressed_vertices;  // vertices of the smoothed graph with valency 2
    std::vector<int> deleted_components;   // indices into components() of the kept graph, descending
};

// The graph left by an even-valency edge subset (before component deletion).
// Vertices with all four slots kept survive with the host framing; chains of
// valency-2 vertices are spliced into single edges, and chains that close up
// without reaching a surviving vertex become free circles. Host free circles
// are kept; component deletion can drop them.
inline FramedFourGraph even_subgraph(const FramedFourGraph& g, const std::vector<int>& kept_edges, std::vector<int>* suppressed = nullptr) {
    const auto all = edges(g);
    const int n = g.vertex_count();
    std::vector<bool> kept_half(g.half_edge_count(), false);
    for (int e : kept_edges) {
        kept_half.at(all.at(e).first) = true;
        kept_half.at(all.at(e).second) = true;
    }
    std::vector<int> valency(n, 0);
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) valency[vertex_of(h)] += kept_half[h];
    std::vector<int> index(n, -1);
    int kept = 0;
    for (int v = 0; v < n; ++v) {
        if (valency[v] % 2) throw std::invalid_argument("even_subgraph: vertex " + std::to_string(v) + " has odd valency");
        if (valency[v] == 4) index[v] = kept++;
        if (valency[v] == 2 && suppressed) suppressed->push_back(v);
    }
    // the other kept slot at a valency-2 vertex
    auto through = [&](HalfEdge h) {
        for (int s = 0; s < 4; ++s) {
            const HalfEdge o = half_edge(vertex_of(h), s);
            if (o != h && kept_half[o]) return o;
        }
        throw std::logic_error("even_subgraph: dangling half-edge");
    };
    std::vector<HalfEdge> mate(4 * kept, -1);
    std::vector<bool> visited(g.half_edge_count(), false);
    for (int v = 0; v < n; ++v) {
        if (index[v] < 0) continue;
        for (int s = 0; s < 4; ++s) {
            const HalfEdge h = half_edge(v, s);
            if (visited[h]) continue;
            visited[h] = true;
            HalfEdge m = g.mate(h);
            while (valency[vertex_of(m)] == 2) {
                visited[m] = true;
                const HalfEdge o = through(m);
                visited[o] = true;
                m = g.mate(o);
            }
            visited[m] = true;
            const HalfEdge a = half_edge(index[v], s);
            const HalfEdge b = half_edge(index[vertex_of(m)], slot_of(m));
            mate[a] = b;
            mate[b] = a;
        }
    }
    int circles = g.free_circles();
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
        if (!kept_half[h] || visited[h]) continue;
        // closed chain of valency-2 vertices
        HalfEdge cur = h;
        do {
            visited[cur] = true;
            const HalfEdge m = g.mate(cur);
            visited[m] = true;
            cur = through(m);
        } while (cur != h);
        ++circles;
    }
    return FramedFourGraph(std::move(mate), circles);
}

inline FramedFourGraph apply_s_minor(const FramedFourGraph& g, const SMinorWitness& w) {
    FramedFourGraph out = g;
    for (const auto& c : w.smoothings) out = smooth(out, c);
    out = even_subgraph(out, w.kept_edges);
    for (int c : w.deleted_components) out = delete_component(out, c);
    return out;
}

inline bool verify_s_minor_witness(const FramedFourGraph& host, const FramedFourGraph& pattern, const SMinorWitness& w) {
    try {
        return is_isomorphic(apply_s_minor(host, w), pattern);
    } catch (const std::exception&) {
        return false;
    }
}

// Even-subgraph part of the search on a fixed graph: every edge subset with
// even valency at each vertex, largest subsets first.
inline std::optional<SMinorWitness> has_even_subgraph_minor(const FramedFourGraph& g, const FramedFourGraph& pattern) {
    const auto all = edges(g);
    const int m = static_cast<int>(all.size());
    if (m > 30) throw std::length_error("has_s_minor: too many edges to exhaust");
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t mask = full + 1; mask-- > 0;) {
        std::vector<int> valency(g.vertex_count(), 0);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) {
                ++valency[vertex_of(all[e].first)];
                ++valency[vertex_of(all[e].second)];
            }
        if (std::any_of(valency.begin(), valency.end(), [](int x) { return x % 2; })) continue;
        const int survivors = static_cast<int>(std::count(valency.begin(), valency.end(), 4));
        if (survivors < pattern.vertex_count()) continue;
        SMinorWitness w;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) w.kept_edges.push_back(e);
        const FramedFourGraph sub = even_subgraph(g, w.kept_edges, &w.suppressed_vertices);
        if (auto dels = deletions_to(sub, pattern)) {
            for (const auto& d : *dels) w.deleted_components.push_back(std::get<DeleteComponent>(d).index);
            return w;
        }
    }
    return std::nullopt;
}

// Searches every graph reachable by smoothings (g itself first, then by
// increasing number of smoothings, one representative per isomorphism
// class) for an even-subgraph reduction to the pattern.
inline std::optional<SMinorWitness> has_s_minor(const FramedFourGraph& g, const FramedFourGraph& pattern) {
    struct Node {
        FramedFourGraph graph;
        int parent;
        SmoothingChoice step;
    };
    std::vector<Node> nodes{{g, -1, {}}};
    std::unordered_map<CanonicalCode, int, CodeHash> seen{{canonical_code(g), 0}};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (auto w = has_even_subgraph_minor(nodes[i].graph, pattern)) {
            for (int at = static_cast<int>(i); nodes[at].parent >= 0; at = nodes[at].parent) w->smoothings.push_back(nodes[at].step);
            std::reverse(w->smoothings.begin(), w->smoothings.end());
            return w;
        }
        if (nodes[i].graph.vertex_count() <= pattern.vertex_count()) continue;
        for (auto& [choice, child] : all_smoothings(nodes[i].graph)) {
            auto code = canonical_code(child);
            if (seen.contains(code)) continue;
            seen.emplace(std::move(code), static_cast<int>(nodes.size()));
            nodes.push_back({std::move(child), static_cast<int>(i), choice});
        }
    }
    return std::nullopt;
}

}  // namespace f4g
