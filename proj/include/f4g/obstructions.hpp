#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "chord_diagram.hpp"
#include "circuit.hpp"
#include "graph.hpp"
#include "minor.hpp"
#include "named.hpp"
#include "parity_union_find.hpp"

namespace f4g {

enum class ObstructionKind { gamma, delta, gamma1 };

inline const char* to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::gamma: return "gamma";
        case ObstructionKind::delta: return "delta";
        case ObstructionKind::gamma1: return "gamma1";
    }
    return "?";
}

inline ObstructionKind obstruction_kind_from_string(std::string_view s) {
    if (s == "gamma") return ObstructionKind::gamma;
    if (s == "delta") return ObstructionKind::delta;
    if (s == "gamma1") return ObstructionKind::gamma1;
    throw std::invalid_argument("unknown obstruction kind '" + std::string(s) + "'");
}

inline FramedFourGraph obstruction_graph(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::gamma: return gamma_graph();
        case ObstructionKind::delta: return delta_graph();
        case ObstructionKind::gamma1: return gamma1_graph();
    }
    throw std::logic_error("obstruction_graph: bad kind");
}

// Two families of chords. For planarity both families are pairwise unlinked;
// for RP^2, `first` is D1 (disc side) and `second` is D2 (Moebius side).
struct ChordSplit {
    std::vector<int> first;
    std::vector<int> second;
    friend bool operator==(const ChordSplit&, const ChordSplit&) = default;
};

// H-graph of a diagram: chords a, b are joined iff one of them is framed 0 and
// they are linked, or both are framed 1 and they are unlinked. Framing-1
// chords are forced onto the Moebius side.
struct HGraph {
    SimpleGraph graph;
    std::vector<bool> forced;
};

inline HGraph build_h(const FramedChordDiagram& d) {
    const int n = d.chord_count();
    HGraph h{SimpleGraph(n), std::vector<bool>(n, false)};
    for (int a = 0; a < n; ++a) {
        h.forced[a] = d.framing(a) == 1;
        for (int b = a + 1; b < n; ++b) {
            const bool lk = d.linked(a, b);
            const bool both_one = d.framing(a) == 1 && d.framing(b) == 1;
            if ((!both_one && lk) || (both_one && !lk)) h.graph.add_edge(a, b);
        }
    }
    return h;
}

struct ColoringConflict {
    enum class Shape { odd_cycle, forced_path };
    Shape shape = Shape::odd_cycle;
    // odd_cycle: the cycle in order. forced_path: a path with an odd number of
    // edges joining two forced vertices.
    std::vector<int> chords;
    friend bool operator==(const ColoringConflict&, const ColoringConflict&) = default;
};

using ColoringResult = std::variant<ChordSplit, ColoringConflict>;

namespace detail {

// Shortest odd cycle of the subgraph induced by `allowed`, or empty.
inline std::vector<int> shortest_odd_cycle(const SimpleGraph& g, const std::vector<bool>& allowed) {
    std::vector<int> best;
    for (int root = 0; root < g.n; ++root) {
        if (!allowed[root]) continue;
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w = 0; w < g.n; ++w) {
                if (!allowed[w] || !g.has_edge(u, w) || dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                parent[w] = u;
                q.push(w);
            }
        }
        for (int u = 0; u < g.n; ++u) {
            for (int w = u + 1; w < g.n; ++w) {
                if (!allowed[u] || !allowed[w] || !g.has_edge(u, w) || dist[u] < 0 || dist[u] != dist[w]) continue;
                const int len = 2 * dist[u] + 1;
                if (!best.empty() && len >= static_cast<int>(best.size())) continue;
                std::vector<int> left, right;
                for (int x = u; x != -1; x = parent[x]) left.push_back(x);
                for (int x = w; x != -1; x = parent[x]) right.push_back(x);
                // the two tree paths must meet only at the root
                std::vector<int> seen = left;
                seen.insert(seen.end(), right.begin(), right.end() - 1);
                std::sort(seen.begin(), seen.end());
                if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) continue;
                std::vector<int> cycle(left.rbegin(), left.rend());
                cycle.insert(cycle.end(), right.begin(), right.end() - 1);
                best = std::move(cycle);
            }
        }
    }
    return best;
}

inline std::vector<int> shortest_path(const SimpleGraph& g, int from, int to) {
    std::vector<int> parent(g.n, -2);
    std::queue<int> q;
    parent[from] = -1;
    q.push(from);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == to) break;
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(u, w) && parent[w] == -2) {
                parent[w] = u;
                q.push(w);
            }
    }
    if (parent[to] == -2) return {};
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

// 2-coloring of H with every forced vertex on the D2 side. Feasibility comes
// from a parity union-find with an extra anchor node standing for D2. On
// failure the conflict reported is, in order of preference: an edge between
// two forced vertices, a shortest odd cycle, or a shortest path with an odd
// number of edges between two forced vertices.
inline ColoringResult forced_two_coloring(const HGraph& h) {
    const int n = h.graph.n;
    const int anchor = n;
    ParityUnionFind uf(n + 1);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
        if (h.forced[v]) ok = uf.unite(v, anchor, 0);
    for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b)
            if (h.graph.has_edge(a, b)) ok = uf.unite(a, b, 1);

    if (ok) {
        ChordSplit split;
        const auto [anchor_root, anchor_parity] = uf.find(anchor);
        for (int v = 0; v < n; ++v) {
            const auto [root, p] = uf.find(v);
            const bool moebius = root == anchor_root ? p == anchor_parity : p == 1;
            (moebius ? split.second : split.first).push_back(v);
        }
        return split;
    }

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (h.forced[a] && h.forced[b] && h.graph.has_edge(a, b))
                return ColoringConflict{ColoringConflict::Shape::forced_path, {a, b}};
    auto cycle = detail::shortest_odd_cycle(h.graph, std::vector<bool>(n, true));
    if (!cycle.empty()) return ColoringConflict{ColoringConflict::Shape::odd_cycle, std::move(cycle)};
    // bipartite, so two forced vertices sit on opposite sides
    std::vector<int> best;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!h.forced[a] || !h.forced[b]) continue;
            auto path = detail::shortest_path(h.graph, a, b);
            if (!path.empty() && path.size() % 2 == 0 && (best.empty() || path.size() < best.size())) best = std::move(path);
        }
    if (best.empty()) throw std::logic_error("forced_two_coloring: infeasible without a conflict");
    return ColoringConflict{ColoringConflict::Shape::forced_path, std::move(best)};
}

// Checks a split against the RP^2 conditions: framing-1 chords all in D2;
// framing-0 chords of D1 pairwise unlinked; framing-1 chords of D2 pairwise
// linked; framing-0 chords of D2 unlinked with every other chord of D2.
inline bool is_valid_rp2_split(const FramedChordDiagram& d, const ChordSplit& s) {
    std::vector<int> side(d.chord_count(), -1);
    for (int c : s.first) side.at(c) = 1;
    for (int c : s.second) {
        if (side.at(c) != -1) return false;
        side[c] = 2;
    }
    if (std::count(side.begin(), side.end(), -1)) return false;
    for (int a = 0; a < d.chord_count(); ++a) {
        if (d.framing(a) == 1 && side[a] != 2) return false;
        for (int b = a + 1; b < d.chord_count(); ++b) {
            if (side[a] != side[b]) continue;
            const bool lk = d.linked(a, b);
            if (side[a] == 1 && lk) return false;
            if (side[a] == 2) {
                if (d.framing(a) == 1 && d.framing(b) == 1 && !lk) return false;
                if ((d.framing(a) == 0 || d.framing(b) == 0) && lk) return false;
            }
        }
    }
    return true;
}

// Planar split: no framing-1 chord, and both families pairwise unlinked.
inline bool is_valid_planar_split(const FramedChordDiagram& d, const ChordSplit& s) {
    std::vector<int> side(d.chord_count(), -1);
    for (int c : s.first) side.at(c) = 1;
    for (int c : s.second) {
        if (side.at(c) != -1) return false;
        side[c] = 2;
    }
    if (std::count(side.begin(), side.end(), -1)) return false;
    for (int a = 0; a < d.chord_count(); ++a) {
        if (d.framing(a) == 1) return false;
        for (int b = a + 1; b < d.chord_count(); ++b)
            if (side[a] == side[b] && d.linked(a, b)) return false;
    }
    return true;
}

// Verdict of a decider on one diagram.
struct DiagramDecision {
    bool holds = true;
    std::optional<ChordSplit> split;
    std::optional<ObstructionKind> kind;
    std::vector<int> chords;  // conflict chords in cycle/path order
};

inline DiagramDecision decide_planarity(const FramedChordDiagram& d) {
    for (int c = 0; c < d.chord_count(); ++c)
        if (d.framing(c) == 1) return {false, std::nullopt, ObstructionKind::gamma, {c}};
    // with every chord framed 0 the H-graph is the interlacement graph
    auto result = forced_two_coloring(build_h(d));
    if (auto* split = std::get_if<ChordSplit>(&result)) return {true, std::move(*split), std::nullopt, {}};
    return {false, std::nullopt, ObstructionKind::delta, std::get<ColoringConflict>(result).chords};
}

inline DiagramDecision decide_rp2(const FramedChordDiagram& d) {
    auto result = forced_two_coloring(build_h(d));
    if (auto* split = std::get_if<ChordSplit>(&result)) return {true, std::move(*split), std::nullopt, {}};
    auto& conflict = std::get<ColoringConflict>(result);
    const bool any_one = std::any_of(conflict.chords.begin(), conflict.chords.end(), [&](int c) { return d.framing(c) == 1; });
    return {false, std::nullopt, any_one ? ObstructionKind::gamma1 : ObstructionKind::delta, std::move(conflict.chords)};
}

// Conflict located in a host graph: the vertices whose chords (in the default
// rotating circuit of their component) form the obstruction, in order.
struct ObstructionConflict {
    ObstructionKind kind = ObstructionKind::gamma;
    std::vector<int> vertices;
};

namespace detail {

enum class ProofShape { single_bad, bad_pair, gon };

struct ShapedConflict {
    ObstructionKind kind;
    ProofShape shape;
    std::vector<int> chords;  // for gon: cycle order, the framing-1 chord (if any) first
};

inline bool is_gon(const FramedChordDiagram& d, const std::vector<int>& cycle) {
    const int m = static_cast<int>(cycle.size());
    if (m < 3 || m % 2 == 0) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if (d.linked(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

// Rotates a cycle so that the framing-1 chord comes first.
inline std::vector<int> bad_first(const FramedChordDiagram& d, std::vector<int> cycle) {
    auto it = std::find_if(cycle.begin(), cycle.end(), [&](int c) { return d.framing(c) == 1; });
    if (it != cycle.end()) std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

// Obstruction shapes the reduction can materialize directly from a diagram:
// one framing-1 chord (gamma); two unlinked framing-1 chords (gamma1); an
// all-framing-0 odd gon (delta); an odd gon with exactly one framing-1
// chord (gamma1).
inline std::optional<ShapedConflict> proof_shape(const FramedChordDiagram& d, ObstructionKind want) {
    const int n = d.chord_count();
    if (want == ObstructionKind::gamma) {
        for (int c = 0; c < n; ++c)
            if (d.framing(c) == 1) return ShapedConflict{want, ProofShape::single_bad, {c}};
        return std::nullopt;
    }
    if (want == ObstructionKind::gamma1) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (d.framing(a) == 1 && d.framing(b) == 1 && !d.linked(a, b))
                    return ShapedConflict{want, ProofShape::bad_pair, {a, b}};
    }
    const HGraph h = build_h(d);
    std::vector<bool> zero(n);
    for (int c = 0; c < n; ++c) zero[c] = d.framing(c) == 0;
    if (want == ObstructionKind::delta) {
        auto cycle = shortest_odd_cycle(h.graph, zero);
        if (!cycle.empty()) return ShapedConflict{want, ProofShape::gon, std::move(cycle)};
        return std::nullopt;
    }
    std::vector<int> best;
    for (int x = 0; x < n; ++x) {
        if (d.framing(x) == 0) continue;
        auto allowed = zero;
        allowed[x] = true;
        auto cycle = shortest_odd_cycle(h.graph, allowed);
        if (!cycle.empty() && std::find(cycle.begin(), cycle.end(), x) != cycle.end() &&
            (best.empty() || cycle.size() < best.size()))
            best = bad_first(d, std::move(cycle));
    }
    if (!best.empty()) return ShapedConflict{want, ProofShape::gon, std::move(best)};
    return std::nullopt;
}

// A connected graph being reduced along a rotating circuit. Chords are
// tracked by their vertex number in the starting graph.
class Reduction {
public:
    Reduction(FramedFourGraph g, std::vector<Pairing> transitions)
        : graph_(std::move(g)), transitions_(std::move(transitions)), position_(graph_.vertex_count()) {
        for (int v = 0; v < graph_.vertex_count(); ++v) position_[v] = v;
    }

    const FramedFourGraph& graph() const { return graph_; }
    const std::vector<std::pair<int, Pairing>>& smoothed() const { return smoothed_; }

    RotatingCircuit circuit() const {
        auto c = circuit_from_transitions(graph_, transitions_);
        if (!c) throw std::logic_error("reduction: transitions no longer form a rotating circuit");
        return *c;
    }

    // Current diagram, with chords renamed back to original vertex numbers
    // through the returned map (index = current chord).
    std::pair<FramedChordDiagram, std::vector<int>> diagram() const {
        std::vector<int> original(graph_.vertex_count());
        for (int v = 0; v < static_cast<int>(position_.size()); ++v)
            if (position_[v] >= 0) original[position_[v]] = v;
        return {chord_diagram(circuit()), original};
    }

    int position(int original) const { return position_.at(original); }

    // Smoothing along the circuit's own transition deletes the chord.
    void smooth_chord(int original) {
        const int cur = position_.at(original);
        if (cur < 0) throw std::logic_error("reduction: vertex already smoothed");
        const Pairing p = transitions_[cur];
        graph_ = smooth(graph_, {cur, p});
        transitions_.erase(transitions_.begin() + cur);
        for (int& pos : position_)
            if (pos > cur) --pos;
        position_[original] = -1;
        smoothed_.emplace_back(original, p);
    }

    void keep_only(const std::vector<int>& keep) {
        for (int v = static_cast<int>(position_.size()) - 1; v >= 0; --v)
            if (position_[v] >= 0 && std::find(keep.begin(), keep.end(), v) == keep.end()) smooth_chord(v);
    }

    void change(const std::vector<int>& originals) {
        std::vector<int> cur;
        for (int v : originals) cur.push_back(position_.at(v));
        transitions_ = change_transitions(graph_, circuit(), cur).transitions;
    }

private:
    FramedFourGraph graph_;
    std::vector<Pairing> transitions_;
    std::vector<int> position_;
    std::vector<std::pair<int, Pairing>> smoothed_;
};

inline bool framing_of(const Reduction& r, int original) {
    auto [d, original_of] = r.diagram();
    return d.framing(r.position(original)) == 1;
}

inline bool linked_in(const Reduction& r, int a, int b) {
    auto [d, original_of] = r.diagram();
    return d.linked(r.position(a), r.position(b));
}

// Shrinks an odd gon c1..cm (c1 possibly framed 1, the rest framed 0) to the
// 3-gon: switching the circuit at the linked framing-0 pair (c2, c3) toggles
// linking only between c1 and c4, after which deleting c2 and c3 leaves the
// (m-2)-gon c1, c4, ..., cm with unchanged framings.
inline void shrink_gon(Reduction& r, std::vector<int>& gon) {
    while (gon.size() > 3) {
        const int c1 = gon[0], c2 = gon[1], c3 = gon[2];
        const bool c1_bad = framing_of(r, c1);
        r.change({c2, c3});
        std::vector<int> rest{c1};
        rest.insert(rest.end(), gon.begin() + 3, gon.end());
        {
            auto [d, original_of] = r.diagram();
            std::vector<int> cur;
            for (int c : rest) cur.push_back(r.position(c));
            if (!is_gon(d, cur)) throw std::logic_error("shrink_gon: switched circuit does not carry the shorter gon");
            if ((d.framing(cur[0]) == 1) != c1_bad) throw std::logic_error("shrink_gon: framing of the first chord changed");
            for (std::size_t i = 1; i < cur.size(); ++i)
                if (d.framing(cur[i]) != 0) throw std::logic_error("shrink_gon: a framing-0 chord changed framing");
        }
        r.smooth_chord(std::max(c2, c3));
        r.smooth_chord(std::min(c2, c3));
        gon = std::move(rest);
    }
}

// Reduces a connected graph along `transitions` to the target of `shape`,
// returning the smoothings as (original vertex, pairing).
inline std::vector<std::pair<int, Pairing>> reduce(const FramedFourGraph& g, std::vector<Pairing> transitions, const ShapedConflict& shape) {
    Reduction r(g, std::move(transitions));
    std::vector<int> chords = shape.chords;
    r.keep_only(chords);
    if (shape.shape == ProofShape::gon) {
        shrink_gon(r, chords);
        if (shape.kind == ObstructionKind::gamma1) {
            // P3: switching at the framing-1 chord flips both others to
            // framing 1 and unlinks them
            r.change({chords[0]});
            if (!framing_of(r, chords[1]) || !framing_of(r, chords[2]) || linked_in(r, chords[1], chords[2]))
                throw std::logic_error("reduce: switching P3 at its framing-1 chord did not expose two unlinked framing-1 chords");
            r.smooth_chord(chords[0]);
        }
    }
    if (!is_isomorphic(r.graph(), obstruction_graph(shape.kind)))
        throw std::logic_error(std::string("reduce: reduction did not reach ") + to_string(shape.kind));
    return r.smoothed();
}

}  // namespace detail

// Materializes a conflict found in g as an explicit minor witness ending at
// the obstruction graph: chords outside the conflict are smoothed away along
// the circuit, odd gons are shortened two chords at a time by switching the
// circuit, and a 3-gon with one framing-1 chord is switched at that chord to
// expose two unlinked framing-1 chords. Conflicts that do not have one of the
// directly reducible shapes (forced paths, odd cycles with several framing-1
// chords) are re-read on the other rotating circuits of the component until
// one does. The returned witness is replayed and checked before returning.
inline MinorWitness materialize_obstruction(const FramedFourGraph& g, const ObstructionConflict& conflict) {
    if (conflict.vertices.empty()) throw std::invalid_argument("materialize_obstruction: empty conflict");
    const auto comps = vertex_components(g);
    const std::vector<int>* comp = nullptr;
    for (const auto& vs : comps)
        if (std::binary_search(vs.begin(), vs.end(), conflict.vertices.front())) comp = &vs;
    if (!comp) throw std::invalid_argument("materialize_obstruction: unknown vertex");
    std::vector<int> local;
    for (int v : conflict.vertices) {
        auto it = std::lower_bound(comp->begin(), comp->end(), v);
        if (it == comp->end() || *it != v) throw std::invalid_argument("materialize_obstruction: conflict spans several components");
        local.push_back(static_cast<int>(it - comp->begin()));
    }
    const FramedFourGraph part = induced(g, *comp);
    const RotatingCircuit circuit = rotating_circuit(part);
    const FramedChordDiagram d = chord_diagram(circuit);

    // the conflict has to be an obstruction of the component's diagram
    auto mismatch = [] { return std::invalid_argument("materialize_obstruction: conflict does not match the graph's diagram"); };
    std::optional<detail::ShapedConflict> shape;
    switch (conflict.kind) {
        case ObstructionKind::gamma:
            if (local.size() != 1 || d.framing(local[0]) != 1) throw mismatch();
            shape = detail::ShapedConflict{conflict.kind, detail::ProofShape::single_bad, local};
            break;
        case ObstructionKind::delta: {
            const bool zero = std::all_of(local.begin(), local.end(), [&](int c) { return d.framing(c) == 0; });
            if (!zero || !detail::is_gon(d, local)) throw mismatch();
            shape = detail::ShapedConflict{conflict.kind, detail::ProofShape::gon, local};
            break;
        }
        case ObstructionKind::gamma1: {
            const HGraph h = build_h(d);
            const int m = static_cast<int>(local.size());
            const int bad = static_cast<int>(std::count_if(local.begin(), local.end(), [&](int c) { return d.framing(c) == 1; }));
            bool walk = m >= 2;
            for (int i = 0; i + 1 < m && walk; ++i) walk = h.graph.has_edge(local[i], local[i + 1]);
            const bool odd_cycle = walk && m % 2 == 1 && m >= 3 && h.graph.has_edge(local.back(), local.front());
            const bool forced_path = walk && m % 2 == 0 && h.forced[local.front()] && h.forced[local.back()];
            if (bad == 0 || !(odd_cycle || forced_path)) throw mismatch();
            if (m == 2 && bad == 2)
                shape = detail::ShapedConflict{conflict.kind, detail::ProofShape::bad_pair, local};
            else if (odd_cycle && bad == 1 && detail::is_gon(d, local))
                shape = detail::ShapedConflict{conflict.kind, detail::ProofShape::gon, detail::bad_first(d, local)};
            break;
        }
    }

    std::vector<std::pair<int, Pairing>> local_steps;
    if (shape) {
        local_steps = detail::reduce(part, circuit.transitions, *shape);
    } else {
        bool done = false;
        for (const auto& c : all_rotating_circuits(part)) {
            auto s = detail::proof_shape(chord_diagram(c), conflict.kind);
            if (!s) continue;
            local_steps = detail::reduce(part, c.transitions, *s);
            done = true;
            break;
        }
        if (!done) throw std::logic_error("materialize_obstruction: no rotating circuit exposes a reducible conflict");
    }

    // lift to host numbering; other components are left alone until the end
    MinorWitness w;
    std::vector<int> host_pos = *comp;
    for (auto [v, p] : local_steps) {
        const int at = host_pos[v];
        w.steps.push_back(SmoothingChoice{at, p});
        for (int& x : host_pos)
            if (x > at) --x;
    }
    const FramedFourGraph target = obstruction_graph(conflict.kind);
    auto dels = deletions_to(replay(g, w.steps), target);
    if (!dels) throw std::logic_error("materialize_obstruction: replay does not contain the target");
    w.steps.insert(w.steps.end(), dels->begin(), dels->end());
    w.source_fingerprint = fingerprint(g);
    w.target_fingerprint = fingerprint(target);
    if (!verify_minor_witness(g, target, w)) throw std::logic_error("materialize_obstruction: witness does not replay");
    return w;
}

struct Obstruction {
    ObstructionKind kind = ObstructionKind::gamma;
    std::vector<int> chords;  // chords of the component diagram, conflict order
    std::optional<MinorWitness> minor;
};

struct ComponentVerdict {
    std::vector<int> vertices;  // host vertices; chord i is vertices[i]
    RotatingCircuit circuit;    // on the component, vertices renumbered 0..k-1
    FramedChordDiagram diagram;
    bool holds = true;
    bool planar = true;
    std::optional<ChordSplit> split;
    std::optional<Obstruction> obstruction;
};

struct PlanarityVerdict {
    bool planar = true;
    std::vector<ComponentVerdict> components;
};

struct Rp2Verdict {
    bool embeddable = true;
    bool multi_component = false;
    // with the multi-component policy: more than one component needs the
    // cross-cap, which RP^2 cannot provide twice
    bool multiple_nonplanar = false;
    std::vector<ComponentVerdict> components;
};

struct DecideOptions {
    bool materialize = true;
    bool multi_component = false;
};

namespace detail {

template <class Decide>
std::vector<ComponentVerdict> decide_components(const FramedFourGraph& g, Decide decide, const DecideOptions& opt) {
    std::vector<ComponentVerdict> out;
    for (const auto& vs : vertex_components(g)) {
        ComponentVerdict cv;
        cv.vertices = vs;
        const FramedFourGraph part = induced(g, vs);
        cv.circuit = rotating_circuit(part);
        cv.diagram = chord_diagram(cv.circuit);
        cv.planar = decide_planarity(cv.diagram).holds;
        DiagramDecision dec = decide(cv.diagram);
        cv.holds = dec.holds;
        cv.split = std::move(dec.split);
        if (!dec.holds) {
            Obstruction ob{*dec.kind, dec.chords, std::nullopt};
            if (opt.materialize) {
                ObstructionConflict conflict{ob.kind, {}};
                for (int c : dec.chords) conflict.vertices.push_back(vs[c]);
                ob.minor = materialize_obstruction(g, conflict);
            }
            cv.obstruction = std::move(ob);
        }
        out.push_back(std::move(cv));
    }
    return out;
}

}  // namespace detail

// Per component: a framing-1 chord in the circuit's diagram means Gamma is a
// minor; otherwise the component is planar iff its interlacement graph is
// bipartite, and an odd cycle leads to Delta.
inline PlanarityVerdict is_planar(const FramedFourGraph& g, const DecideOptions& opt = {}) {
    PlanarityVerdict v;
    v.components = detail::decide_components(g, decide_planarity, opt);
    v.planar = std::all_of(v.components.begin(), v.components.end(), [](const auto& c) { return c.holds; });
    return v;
}

// Per component: forced 2-coloring of the H-graph. Without the
// multi-component policy the graph is accepted iff every component is; with
// it, at most one component may be non-planar.
inline Rp2Verdict rp2_checkerboard_embeddable(const FramedFourGraph& g, const DecideOptions& opt = {}) {
    Rp2Verdict v;
    v.multi_component = opt.multi_component;
    v.components = detail::decide_components(g, decide_rp2, opt);
    const bool each = std::all_of(v.components.begin(), v.components.end(), [](const auto& c) { return c.holds; });
    const auto nonplanar = std::count_if(v.components.begin(), v.components.end(), [](const auto& c) { return !c.planar; });
    v.multiple_nonplanar = opt.multi_component && nonplanar > 1;
    v.embeddable = each && !v.multiple_nonplanar;
    return v;
}

// Two edge-disjoint closed paths through a vertex X crossing transversally
// there: `first` leaves X at slot 0 and returns at slot 2, `second` leaves at
// slot 1 and returns at slot 3. Each is listed as alternating half-edges
// (leave, arrive, leave, arrive, ...). Any other vertex is passed at most
// twice in total, and a vertex passed twice is passed along two adjacent
// slot pairs, so the paths only touch there. Keeping their edges, smoothing
// the touching vertices and suppressing the rest leaves a copy of Gamma.
struct TwoCycleWitness {
    int vertex = 0;
    std::vector<HalfEdge> first;
    std::vector<HalfEdge> second;
};

namespace detail {

class TwoCycleSearch {
public:
    TwoCycleSearch(const FramedFourGraph& g, int x) : g_(g), x_(x), used_(g.half_edge_count(), false) {
        for (int s = 0; s < 4; ++s) used_[half_edge(x, s)] = true;
    }

    std::optional<TwoCycleWitness> run() {
        std::vector<HalfEdge> path;
        std::optional<TwoCycleWitness> found;
        walk(half_edge(x_, 0), half_edge(x_, 2), path, [&](const std::vector<HalfEdge>& first) {
            std::vector<HalfEdge> path2;
            return walk(half_edge(x_, 1), half_edge(x_, 3), path2, [&](const std::vector<HalfEdge>& second) {
                found = TwoCycleWitness{x_, first, second};
                return true;
            });
        });
        return found;
    }

private:
    // Extends a path that leaves through `out`; returns true to stop.
    template <class OnPath>
    bool walk(HalfEdge out, HalfEdge target, std::vector<HalfEdge>& path, const OnPath& on_path) {
        const HalfEdge in = g_.mate(out);
        if (in != target && (vertex_of(in) == x_ || used_[in])) return false;
        path.push_back(out);
        path.push_back(in);
        bool stop = false;
        if (in == target) {
            stop = on_path(path);
        } else {
            const int w = vertex_of(in);
            used_[in] = true;
            int busy = 0;
            for (int s = 0; s < 4; ++s) busy += used_[half_edge(w, s)];
            for (int s = 0; s < 4 && !stop; ++s) {
                const HalfEdge next = half_edge(w, s);
                if (used_[next]) continue;
                // second pass through w: both passes must turn
                if (busy == 3 && !slots_adjacent(slot_of(in), s)) continue;
                used_[next] = true;
                stop = walk(next, target, path, on_path);
                used_[next] = false;
            }
            used_[in] = false;
        }
        path.pop_back();
        path.pop_back();
        return stop;
    }

    const FramedFourGraph& g_;
    int x_;
    std::vector<bool> used_;
};

}  // namespace detail

inline std::optional<TwoCycleWitness> gamma_s_minor_witness(const FramedFourGraph& g) {
    for (int x = 0; x < g.vertex_count(); ++x)
        if (auto w = detail::TwoCycleSearch(g, x).run()) return w;
    return std::nullopt;
}

inline bool verify_two_cycle_witness(const FramedFourGraph& g, const TwoCycleWitness& w) {
    const int x = w.vertex;
    if (x < 0 || x >= g.vertex_count()) return false;
    std::vector<int> use(g.half_edge_count(), 0);
    std::vector<std::vector<std::pair<int, int>>> passes(g.vertex_count());
    auto check = [&](const std::vector<HalfEdge>& p, int from, int to) {
        if (p.size() < 2 || p.size() % 2) return false;
        if (p.front() != half_edge(x, from) || p.back() != half_edge(x, to)) return false;
        for (std::size_t i = 0; i < p.size(); i += 2) {
            if (p[i] < 0 || p[i] >= g.half_edge_count() || g.mate(p[i]) != p[i + 1]) return false;
            ++use[p[i]];
            ++use[p[i + 1]];
            if (i + 2 < p.size()) {
                const int v = vertex_of(p[i + 1]);
                if (v == x || vertex_of(p[i + 2]) != v) return false;
                passes[v].emplace_back(slot_of(p[i + 1]), slot_of(p[i + 2]));
            }
        }
        return true;
    };
    if (!check(w.first, 0, 2) || !check(w.second, 1, 3)) return false;
    if (std::any_of(use.begin(), use.end(), [](int u) { return u > 1; })) return false;
    for (const auto& ps : passes)
        if (ps.size() == 2 && !(slots_adjacent(ps[0].first, ps[0].second) && slots_adjacent(ps[1].first, ps[1].second))) return false;
    return true;
}

}  // namespace f4g
