#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "graph.hpp"

namespace f4g {

using CanonicalCode = std::vector<int>;

namespace detail {

// Straight-ahead traversal code of a connected graph with at least one
// vertex. Walking straight through every vertex (entering at slot s, leaving
// at the opposite slot) splits the edges into closed curves, each vertex
// being passed twice. Listing the curves as sequences of vertex labels, with
// labels handed out in order of first appearance, determines the graph up to
// framed isomorphism: the first listed passage of a vertex becomes slots 0->2
// and the second 1->3. The canonical code is the minimum over every starting
// half-edge and over the direction of each further curve.
class StraightAheadCoder {
public:
    explicit StraightAheadCoder(const FramedFourGraph& g) : g_(g), n_(g.vertex_count()) {}

    CanonicalCode run() {
        for (HalfEdge h = 0; h < g_.half_edge_count(); ++h) {
            State st;
            st.label.assign(n_, -1);
            st.passed.assign(2 * n_, false);
            walk(st, h);
            extend(st);
        }
        return best_;
    }

private:
    struct State {
        std::vector<int> label;
        std::vector<bool> passed;  // per (vertex, opposite pair)
        CanonicalCode code;
        int next_label = 0;
    };

    // Follow one straight-ahead curve leaving through half-edge `start`.
    void walk(State& st, HalfEdge start) const {
        HalfEdge out = start;
        do {
            const int v = vertex_of(out);
            if (st.label[v] < 0) st.label[v] = st.next_label++;
            st.passed[2 * v + (slot_of(out) & 1)] = true;
            st.code.push_back(st.label[v]);
            const HalfEdge in = g_.mate(out);
            out = half_edge(vertex_of(in), opposite_slot(slot_of(in)));
        } while (out != start);
        st.code.push_back(-1);
    }

    void extend(State& st) {
        if (!best_.empty() && !prefix_viable(st.code)) return;
        // lowest labeled vertex with an unpassed pair
        int pick = -1, pick_label = n_;
        for (int v = 0; v < n_; ++v) {
            if (st.label[v] < 0 || st.label[v] >= pick_label) continue;
            if (!st.passed[2 * v] || !st.passed[2 * v + 1]) {
                pick = v;
                pick_label = st.label[v];
            }
        }
        if (pick < 0) {
            if (best_.empty() || st.code < best_) best_ = st.code;
            return;
        }
        const int pair = st.passed[2 * pick] ? 1 : 0;
        for (int slot : {pair, pair + 2}) {
            State next = st;
            walk(next, half_edge(pick, slot));
            extend(next);
        }
    }

    bool prefix_viable(const CanonicalCode& code) const {
        const auto len = std::min(code.size(), best_.size());
        for (std::size_t i = 0; i < len; ++i) {
            if (code[i] != best_[i]) return code[i] < best_[i];
        }
        return true;
    }

    const FramedFourGraph& g_;
    int n_;
    CanonicalCode best_;
};

}  // namespace detail

// Canonical code of a whole graph: free-circle count, then the sorted codes of
// the vertex components. Equal codes <=> framed isomorphism.
inline CanonicalCode canonical_code(const FramedFourGraph& g) {
    std::vector<CanonicalCode> parts;
    for (const auto& vs : vertex_components(g)) parts.push_back(detail::StraightAheadCoder(induced(g, vs)).run());
    std::sort(parts.begin(), parts.end());
    CanonicalCode out{g.free_circles()};
    for (const auto& p : parts) {
        out.push_back(-2);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

inline bool is_isomorphic(const FramedFourGraph& a, const FramedFourGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.free_circles() != b.free_circles()) return false;
    return canonical_code(a) == canonical_code(b);
}

struct CodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : c) {
            h ^= static_cast<std::uint32_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Stable 64-bit FNV-1a digest of the canonical code, as 16 hex digits.
inline std::string fingerprint(const FramedFourGraph& g) {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : canonical_code(g)) {
        auto u = static_cast<std::uint32_t>(x);
        for (int i = 0; i < 4; ++i) {
            h ^= (u >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace f4g
