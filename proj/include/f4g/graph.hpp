#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity_union_find.hpp"

namespace f4g {

// A half-edge is addressed as 4 * vertex + slot. At every vertex the slot
// pairs (0,2) and (1,3) are opposite; any other two slots are adjacent.
using HalfEdge = int;

constexpr int vertex_of(HalfEdge h) { return h >> 2; }
constexpr int slot_of(HalfEdge h) { return h & 3; }
constexpr HalfEdge half_edge(int vertex, int slot) { return 4 * vertex + slot; }
constexpr int opposite_slot(int slot) { return slot ^ 2; }
constexpr bool slots_opposite(int a, int b) { return (a ^ b) == 2; }
constexpr bool slots_adjacent(int a, int b) { return (a ^ b) & 1; }

// The two ways of gluing the four slots of a vertex into adjacent pairs.
// A glues (0,1),(2,3); B glues (0,3),(1,2). The same two values describe
// the transition a rotating circuit makes at a vertex.
enum class Pairing : std::uint8_t { A, B };

constexpr int paired_slot(Pairing p, int slot) { return p == Pairing::A ? (slot ^ 1) : (3 - slot); }
constexpr Pairing other(Pairing p) { return p == Pairing::A ? Pairing::B : Pairing::A; }
inline const char* to_string(Pairing p) { return p == Pairing::A ? "A" : "B"; }

struct SmoothingChoice {
    int vertex = 0;
    Pairing pairing = Pairing::A;
    friend bool operator==(const SmoothingChoice&, const SmoothingChoice&) = default;
};

// Framed 4-valent graph: vertices with four slots each, a fixed-point-free
// involution gluing slots into edges (loops allowed), and a count of
// vertex-free circle components.
class FramedFourGraph {
public:
    FramedFourGraph() = default;

    FramedFourGraph(std::vector<HalfEdge> mate, int free_circles)
        : mate_(std::move(mate)), free_circles_(free_circles) {
        if (mate_.size() % 4 != 0) throw std::invalid_argument("FramedFourGraph: slot count not a multiple of 4");
        if (free_circles_ < 0) throw std::invalid_argument("FramedFourGraph: negative free circle count");
        const int n = static_cast<int>(mate_.size());
        for (int h = 0; h < n; ++h) {
            const int m = mate_[h];
            if (m < 0 || m >= n) throw std::invalid_argument("FramedFourGraph: half-edge " + std::to_string(h) + " glued out of range");
            if (m == h) throw std::invalid_argument("FramedFourGraph: half-edge " + std::to_string(h) + " glued to itself");
            if (mate_[m] != h) throw std::invalid_argument("FramedFourGraph: edge gluing is not an involution at " + std::to_string(h));
        }
    }

    static FramedFourGraph circles(int k) { return FramedFourGraph({}, k); }

    int vertex_count() const { return static_cast<int>(mate_.size() / 4); }
    int half_edge_count() const { return static_cast<int>(mate_.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int free_circles() const { return free_circles_; }
    bool empty() const { return mate_.empty() && free_circles_ == 0; }

    HalfEdge mate(HalfEdge h) const { return mate_.at(h); }
    const std::vector<HalfEdge>& mates() const { return mate_; }

    // Labeled equality; use is_isomorphic for structural comparison.
    friend bool operator==(const FramedFourGraph&, const FramedFourGraph&) = default;

private:
    std::vector<HalfEdge> mate_;
    int free_circles_ = 0;
};

// Edges as (h, mate(h)) with h < mate(h), in increasing order of h.
inline std::vector<std::pair<HalfEdge, HalfEdge>> edges(const FramedFourGraph& g) {
    std::vector<std::pair<HalfEdge, HalfEdge>> out;
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h)
        if (h < g.mate(h)) out.emplace_back(h, g.mate(h));
    return out;
}

// Smoothing at one vertex by pure half-edge rewriting: each glued slot pair
// joins the two edges incident to it; chains that run through loops at the
// vertex are followed transitively, and chains closing up without leaving
// the vertex become free circles. Vertices above the smoothed one shift down.
inline FramedFourGraph smooth(const FramedFourGraph& g, SmoothingChoice choice) {
    const int n = g.vertex_count();
    if (choice.vertex < 0 || choice.vertex >= n)
        throw std::out_of_range("smooth: unknown vertex " + std::to_string(choice.vertex));
    const int v = choice.vertex;
    const HalfEdge base = half_edge(v, 0);
    auto local = [&](HalfEdge h) { return vertex_of(h) == v; };
    auto renumber = [&](HalfEdge h) { return vertex_of(h) > v ? h - 4 : h; };

    std::vector<HalfEdge> mate(4 * (n - 1), -1);
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
        if (local(h) || local(g.mate(h))) continue;
        mate[renumber(h)] = renumber(g.mate(h));
    }

    int circles = g.free_circles();
    std::array<bool, 4> seen{};
    for (int s = 0; s < 4; ++s) {
        if (seen[s] || local(g.mate(base + s))) continue;
        int cur = s;
        seen[cur] = true;
        for (;;) {
            const int t = paired_slot(choice.pairing, cur);
            seen[t] = true;
            const HalfEdge m = g.mate(base + t);
            if (!local(m)) {
                const HalfEdge a = renumber(g.mate(base + s));
                const HalfEdge b = renumber(m);
                mate[a] = b;
                mate[b] = a;
                break;
            }
            cur = slot_of(m);
            seen[cur] = true;
        }
    }
    for (int s = 0; s < 4; ++s) {
        if (seen[s]) continue;
        int cur = s;
        do {
            seen[cur] = true;
            const int t = paired_slot(choice.pairing, cur);
            seen[t] = true;
            cur = slot_of(g.mate(base + t));
        } while (cur != s);
        ++circles;
    }
    return FramedFourGraph(std::move(mate), circles);
}

// Vertex sets of the connected components that contain vertices, each sorted,
// ordered by smallest vertex.
inline std::vector<std::vector<int>> vertex_components(const FramedFourGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int s = 0; s < 4; ++s) {
                const int w = vertex_of(g.mate(half_edge(v, s)));
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

// The subgraph on a union of vertex components; vertices keep their relative
// order. Throws if the set is not closed under adjacency.
inline FramedFourGraph induced(const FramedFourGraph& g, const std::vector<int>& vertices, int free_circles = 0) {
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index.at(vertices[i]) = i;
    std::vector<HalfEdge> mate(4 * vertices.size());
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        for (int s = 0; s < 4; ++s) {
            const HalfEdge m = g.mate(half_edge(vertices[i], s));
            const int w = index[vertex_of(m)];
            if (w < 0) throw std::invalid_argument("induced: vertex set is not a union of components");
            mate[half_edge(i, s)] = half_edge(w, slot_of(m));
        }
    }
    return FramedFourGraph(std::move(mate), free_circles);
}

// Connected components: vertex components first (ordered by smallest vertex),
// then one single-circle graph per free circle.
inline std::vector<FramedFourGraph> components(const FramedFourGraph& g) {
    std::vector<FramedFourGraph> out;
    for (const auto& vs : vertex_components(g)) out.push_back(induced(g, vs));
    for (int i = 0; i < g.free_circles(); ++i) out.push_back(FramedFourGraph::circles(1));
    return out;
}

inline int component_count(const FramedFourGraph& g) {
    return static_cast<int>(vertex_components(g).size()) + g.free_circles();
}

inline bool is_connected(const FramedFourGraph& g) { return component_count(g) == 1; }

inline FramedFourGraph disjoint_union(const FramedFourGraph& a, const FramedFourGraph& b) {
    std::vector<HalfEdge> mate = a.mates();
    const int shift = a.half_edge_count();
    for (HalfEdge m : b.mates()) mate.push_back(m + shift);
    return FramedFourGraph(std::move(mate), a.free_circles() + b.free_circles());
}

// Removes the component at `index` in the order produced by components().
inline FramedFourGraph delete_component(const FramedFourGraph& g, int index) {
    auto comps = vertex_components(g);
    const int vc = static_cast<int>(comps.size());
    if (index < 0 || index >= vc + g.free_circles())
        throw std::out_of_range("delete_component: no component " + std::to_string(index));
    if (index >= vc) return FramedFourGraph(g.mates(), g.free_circles() - 1);
    std::vector<int> keep;
    for (int i = 0; i < vc; ++i)
        if (i != index) keep.insert(keep.end(), comps[i].begin(), comps[i].end());
    std::sort(keep.begin(), keep.end());
    return induced(g, keep, g.free_circles());
}

// Orientation of every edge such that at each vertex one opposite pair is
// incoming and the other outgoing. incoming[h] says whether the edge is
// directed into the vertex at half-edge h.
struct SourceSinkStructure {
    std::vector<bool> incoming;
    std::vector<bool> circle_orientation;
    friend bool operator==(const SourceSinkStructure&, const SourceSinkStructure&) = default;
};

inline bool is_source_sink(const FramedFourGraph& g, const SourceSinkStructure& s) {
    if (static_cast<int>(s.incoming.size()) != g.half_edge_count()) return false;
    if (static_cast<int>(s.circle_orientation.size()) != g.free_circles()) return false;
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
        if (s.incoming[h] == s.incoming[g.mate(h)]) return false;
        if (s.incoming[h] != s.incoming[h ^ 2]) return false;
        if (s.incoming[h] == s.incoming[h ^ 1]) return false;
    }
    return true;
}

// All source-sink structures. Each vertex carries one bit (whether slots 0,2
// are incoming); every edge forces a parity between its end vertices, so the
// structures are the consistent assignments of one bit per component.
inline std::vector<SourceSinkStructure> source_sink_structures(const FramedFourGraph& g) {
    const int n = g.vertex_count();
    ParityUnionFind uf(n);
    for (auto [h, m] : edges(g)) {
        const int parity = 1 ^ (slot_of(h) & 1) ^ (slot_of(m) & 1);
        if (!uf.unite(vertex_of(h), vertex_of(m), parity)) return {};
    }
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
        if (uf.find(v).first == v) roots.push_back(v);
    const int free_bits = static_cast<int>(roots.size()) + g.free_circles();
    if (free_bits > 24) throw std::length_error("source_sink_structures: too many components to list");

    std::vector<SourceSinkStructure> out;
    for (std::uint32_t mask = 0; mask < (1u << free_bits); ++mask) {
        std::vector<int> root_bit(n, 0);
        for (int i = 0; i < static_cast<int>(roots.size()); ++i) root_bit[roots[i]] = (mask >> i) & 1;
        SourceSinkStructure s;
        s.incoming.resize(g.half_edge_count());
        for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
            auto [root, p] = uf.find(vertex_of(h));
            const int even_in = root_bit[root] ^ p;
            s.incoming[h] = (even_in ^ (slot_of(h) & 1)) != 0;
        }
        for (int c = 0; c < g.free_circles(); ++c)
            s.circle_orientation.push_back(((mask >> (roots.size() + c)) & 1) != 0);
        out.push_back(std::move(s));
    }
    return out;
}

inline bool has_source_sink_structure(const FramedFourGraph& g) {
    ParityUnionFind uf(g.vertex_count());
    for (auto [h, m] : edges(g))
        if (!uf.unite(vertex_of(h), vertex_of(m), 1 ^ (slot_of(h) & 1) ^ (slot_of(m) & 1))) return false;
    return true;
}

}  // namespace f4g
