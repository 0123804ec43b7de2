#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace f4g {

// Simple undirected graph on 0..n-1 as an adjacency matrix; used for
// interlacement graphs and H-graphs, which stay small.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit SimpleGraph(int size = 0) : n(size), adj(size, std::vector<bool>(size, false)) {}

    void add_edge(int a, int b) {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    bool has_edge(int a, int b) const { return adj[a][b]; }
    std::vector<int> neighbors(int a) const {
        std::vector<int> out;
        for (int b = 0; b < n; ++b)
            if (adj[a][b]) out.push_back(b);
        return out;
    }
    int edge_count() const {
        int c = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) c += adj[a][b];
        return c;
    }
    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// Framed chord diagram. Chords are numbered 0..n-1; the word lists the chord
// met at each of the 2n points of the oriented core circle, and each chord
// carries a framing bit. In text, chords are written 1-based.
class FramedChordDiagram {
public:
    FramedChordDiagram() = default;

    FramedChordDiagram(std::vector<int> word, std::vector<std::uint8_t> framings)
        : word_(std::move(word)), framings_(std::move(framings)) {
        const int n = static_cast<int>(framings_.size());
        if (static_cast<int>(word_.size()) != 2 * n)
            throw std::invalid_argument("FramedChordDiagram: word length " + std::to_string(word_.size()) +
                                        " does not match " + std::to_string(n) + " framings");
        ends_.assign(n, {-1, -1});
        for (int p = 0; p < 2 * n; ++p) {
            const int c = word_[p];
            if (c < 0 || c >= n) throw std::invalid_argument("FramedChordDiagram: chord " + std::to_string(c) + " out of range");
            if (ends_[c].first < 0)
                ends_[c].first = p;
            else if (ends_[c].second < 0)
                ends_[c].second = p;
            else
                throw std::invalid_argument("FramedChordDiagram: chord " + std::to_string(c + 1) + " occurs more than twice");
        }
        for (int c = 0; c < n; ++c) {
            if (ends_[c].second < 0) throw std::invalid_argument("FramedChordDiagram: chord " + std::to_string(c + 1) + " occurs fewer than twice");
            if (framings_[c] > 1) throw std::invalid_argument("FramedChordDiagram: framing of chord " + std::to_string(c + 1) + " is not 0 or 1");
        }
    }

    int chord_count() const { return static_cast<int>(framings_.size()); }
    bool empty() const { return framings_.empty(); }
    const std::vector<int>& word() const { return word_; }
    const std::vector<std::uint8_t>& framings() const { return framings_; }
    int framing(int chord) const { return framings_.at(chord); }
    std::pair<int, int> endpoints(int chord) const { return ends_.at(chord); }

    // Endpoints of b separate the endpoints of a on the core circle.
    bool linked(int a, int b) const {
        if (a == b) throw std::invalid_argument("linked: a chord is not linked with itself");
        const auto [a1, a2] = endpoints(a);
        const auto [b1, b2] = endpoints(b);
        const bool in1 = a1 < b1 && b1 < a2;
        const bool in2 = a1 < b2 && b2 < a2;
        return in1 != in2;
    }

    friend bool operator==(const FramedChordDiagram& x, const FramedChordDiagram& y) {
        return x.word_ == y.word_ && x.framings_ == y.framings_;
    }

private:
    std::vector<int> word_;
    std::vector<std::uint8_t> framings_;
    std::vector<std::pair<int, int>> ends_;
};

// Builds a diagram from 1-based labels; framings are given per label.
inline FramedChordDiagram make_diagram(const std::vector<int>& labels, const std::vector<int>& framings) {
    std::vector<int> word;
    for (int l : labels) word.push_back(l - 1);
    std::vector<std::uint8_t> f;
    for (int b : framings) {
        if (b != 0 && b != 1) throw std::invalid_argument("make_diagram: framing bit must be 0 or 1");
        f.push_back(static_cast<std::uint8_t>(b));
    }
    return FramedChordDiagram(std::move(word), std::move(f));
}

inline SimpleGraph interlacement_graph(const FramedChordDiagram& d) {
    SimpleGraph g(d.chord_count());
    for (int a = 0; a < d.chord_count(); ++a)
        for (int b = a + 1; b < d.chord_count(); ++b)
            if (d.linked(a, b)) g.add_edge(a, b);
    return g;
}

// Keeps the given chords (any order), renumbered by their old numbers.
inline FramedChordDiagram subdiagram(const FramedChordDiagram& d, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> index(d.chord_count(), -1);
    std::vector<std::uint8_t> f;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        index.at(keep[i]) = i;
        f.push_back(d.framings()[keep[i]]);
    }
    std::vector<int> word;
    for (int c : d.word())
        if (index[c] >= 0) word.push_back(index[c]);
    return FramedChordDiagram(std::move(word), std::move(f));
}

inline FramedChordDiagram delete_chord(const FramedChordDiagram& d, int chord) {
    if (chord < 0 || chord >= d.chord_count()) throw std::out_of_range("delete_chord: unknown chord " + std::to_string(chord + 1));
    std::vector<int> keep;
    for (int c = 0; c < d.chord_count(); ++c)
        if (c != chord) keep.push_back(c);
    return subdiagram(d, keep);
}

// Relabels chords by order of first occurrence.
inline FramedChordDiagram normalized(const FramedChordDiagram& d) {
    std::vector<int> index(d.chord_count(), -1);
    int next = 0;
    std::vector<int> word;
    std::vector<std::uint8_t> f(d.chord_count());
    for (int c : d.word()) {
        if (index[c] < 0) {
            index[c] = next++;
            f[index[c]] = d.framings()[c];
        }
        word.push_back(index[c]);
    }
    return FramedChordDiagram(std::move(word), std::move(f));
}

inline FramedChordDiagram rotated(const FramedChordDiagram& d, int shift) {
    const int len = static_cast<int>(d.word().size());
    if (len == 0) return d;
    std::vector<int> word(len);
    for (int i = 0; i < len; ++i) word[i] = d.word()[(i + shift) % len];
    return FramedChordDiagram(std::move(word), d.framings());
}

// Canonical representative under rotation of the core and relabeling of
// chords. Reflection is not quotiented: the core is oriented.
inline FramedChordDiagram canonical_diagram(const FramedChordDiagram& d) {
    FramedChordDiagram best = normalized(d);
    for (int s = 1; s < static_cast<int>(d.word().size()); ++s) {
        FramedChordDiagram cand = normalized(rotated(d, s));
        if (std::tie(cand.word(), cand.framings()) < std::tie(best.word(), best.framings())) best = std::move(cand);
    }
    return best;
}

inline bool equivalent(const FramedChordDiagram& a, const FramedChordDiagram& b) {
    return a.chord_count() == b.chord_count() && canonical_diagram(a) == canonical_diagram(b);
}

inline std::string word_string(const FramedChordDiagram& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.word().size(); ++i) os << (i ? " " : "") << d.word()[i] + 1;
    return os.str();
}

// Framing bits listed by chord number.
inline std::string framing_string(const FramedChordDiagram& d) {
    std::ostringstream os;
    for (int c = 0; c < d.chord_count(); ++c) os << (c ? " " : "") << int(d.framings()[c]);
    return os.str();
}

inline std::string to_string(const FramedChordDiagram& d) {
    return "\"" + word_string(d) + "\" (" + framing_string(d) + ")";
}

// Restores a framed 4-graph from a chord diagram: chord c becomes vertex c,
// its first point is a passage 0->1, its second point a passage 2->3 when
// framed 0 and 3->2 when framed 1; consecutive points are joined by edges.
// The core then traverses the result as a rotating circuit with transition A
// at every vertex. The empty diagram restores to one free circle.
inline FramedFourGraph realize(const FramedChordDiagram& d) {
    const int n = d.chord_count();
    if (n == 0) return FramedFourGraph::circles(1);
    const int len = 2 * n;
    std::vector<int> entry(len), exit(len);
    for (int p = 0; p < len; ++p) {
        const int c = d.word()[p];
        if (d.endpoints(c).first == p) {
            entry[p] = half_edge(c, 0);
            exit[p] = half_edge(c, 1);
        } else if (d.framing(c) == 0) {
            entry[p] = half_edge(c, 2);
            exit[p] = half_edge(c, 3);
        } else {
            entry[p] = half_edge(c, 3);
            exit[p] = half_edge(c, 2);
        }
    }
    std::vector<HalfEdge> mate(4 * n);
    for (int p = 0; p < len; ++p) {
        const int q = (p + 1) % len;
        mate[exit[p]] = entry[q];
        mate[entry[q]] = exit[p];
    }
    return FramedFourGraph(std::move(mate), 0);
}

}  // namespace f4g
