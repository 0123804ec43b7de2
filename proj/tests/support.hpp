#pragma once

// Shared helpers for the test suite: random generators and brute-force
// oracles that do not reuse the library's own algorithms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "f4g/chord_diagram.hpp"
#include "f4g/graph.hpp"

namespace f4g::test {

inline std::string data_path(const std::string& name) { return std::string(F4G_DATA_DIR) + "/" + name; }

inline FramedChordDiagram random_diagram(std::mt19937& rng, int n) {
    std::vector<int> word;
    for (int c = 0; c < n; ++c) word.insert(word.end(), {c, c});
    std::shuffle(word.begin(), word.end(), rng);
    std::vector<std::uint8_t> framings(n);
    for (auto& f : framings) f = static_cast<std::uint8_t>(rng() & 1);
    return FramedChordDiagram(std::move(word), std::move(framings));
}

// The eight slot permutations that keep opposite slots opposite.
inline std::vector<std::array<int, 4>> slot_symmetries() {
    std::vector<std::array<int, 4>> out;
    for (int r = 0; r < 4; ++r)
        for (int flip = 0; flip < 2; ++flip) {
            std::array<int, 4> m{};
            for (int s = 0; s < 4; ++s) m[s] = ((flip ? 4 - s : s) + r) % 4;
            out.push_back(m);
        }
    return out;
}

// Renames vertices by `perm` and rotates/reflects slots at vertex v by sym[v].
inline FramedFourGraph relabel(const FramedFourGraph& g, const std::vector<int>& perm, const std::vector<std::array<int, 4>>& sym) {
    auto to = [&](HalfEdge h) { return 4 * perm[h / 4] + sym[h / 4][h % 4]; };
    std::vector<HalfEdge> mate(g.half_edge_count());
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) mate[to(h)] = to(g.mate(h));
    return FramedFourGraph(std::move(mate), g.free_circles());
}

inline FramedFourGraph random_relabel(const FramedFourGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto syms = slot_symmetries();
    std::vector<std::array<int, 4>> sym;
    for (int v = 0; v < g.vertex_count(); ++v) sym.push_back(syms[rng() % syms.size()]);
    return relabel(g, perm, sym);
}

// Tries every vertex bijection and every slot symmetry per vertex.
inline bool brute_isomorphic(const FramedFourGraph& a, const FramedFourGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.free_circles() != b.free_circles()) return false;
    const int n = a.vertex_count();
    const auto syms = slot_symmetries();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> choice(n, 0);
        for (;;) {
            std::vector<std::array<int, 4>> sym;
            for (int v = 0; v < n; ++v) sym.push_back(syms[choice[v]]);
            if (relabel(a, perm, sym) == b) return true;
            int v = 0;
            while (v < n && ++choice[v] == 8) choice[v++] = 0;
            if (v == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Counts source-sink structures by trying every orientation of every edge
// and of every free circle.
inline int brute_source_sink_count(const FramedFourGraph& g) {
    const auto all = edges(g);
    const int m = static_cast<int>(all.size());
    int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> incoming(g.half_edge_count(), 0);
        for (int e = 0; e < m; ++e) incoming[((mask >> e) & 1) ? all[e].first : all[e].second] = 1;
        bool ok = true;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            const int* in = &incoming[4 * v];
            ok = in[0] == in[2] && in[1] == in[3] && in[0] != in[1];
        }
        count += ok;
    }
    return count << g.free_circles();
}

// Linked iff the occurrences of a and b alternate around the core.
inline bool brute_linked(const FramedChordDiagram& d, int a, int b) {
    std::string s;
    for (int c : d.word())
        if (c == a || c == b) s += c == a ? 'a' : 'b';
    return s == "abab" || s == "baba";
}

// Searches all 2^n side assignments. Planar: no framing-1 chord and no two
// chords on the same side linked. RP^2: framing-1 chords on side 2, framing-0
// chords of side 1 pairwise unlinked, framing-1 chords of side 2 pairwise
// linked, framing-0 chords of side 2 unlinked with every other chord there.
inline bool brute_split_exists(const FramedChordDiagram& d, bool rp2) {
    const int n = d.chord_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto side = [&](int c) { return (mask >> c) & 1; };  // 1 = side 2
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (d.framing(a) == 1 && (!rp2 || !side(a))) ok = false;
            for (int b = a + 1; b < n && ok; ++b) {
                if (side(a) != side(b)) continue;
                const bool lk = brute_linked(d, a, b);
                if (!rp2 || !side(a))
                    ok = !lk;
                else if (d.framing(a) == 1 && d.framing(b) == 1)
                    ok = lk;
                else
                    ok = !lk;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace f4g::test
