#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chord_diagram.hpp"
#include "graph.hpp"

namespace f4g {

// One pass of a circuit through a vertex: enters at slot `entry`, leaves at
// the adjacent slot `exit`.
struct Passage {
    int vertex = 0;
    int entry = 0;
    int exit = 0;
    friend bool operator==(const Passage&, const Passage&) = default;
};

// A rotating circuit of a connected graph: the transition pattern at each
// vertex plus the closed traversal it induces, starting with the passage that
// enters vertex 0 at slot 0. A circle component has no passages.
struct RotatingCircuit {
    std::vector<Pairing> transitions;
    std::vector<Passage> passages;
    friend bool operator==(const RotatingCircuit&, const RotatingCircuit&) = default;
};

// Closed curves obtained by following the given transition at every vertex.
// Each curve starts at the lowest vertex with an untraversed slot, entering
// at its lowest such slot.
inline std::vector<std::vector<Passage>> trace_curves(const FramedFourGraph& g, const std::vector<Pairing>& transitions) {
    if (static_cast<int>(transitions.size()) != g.vertex_count())
        throw std::invalid_argument("trace_curves: one transition per vertex required");
    std::vector<bool> used(g.half_edge_count(), false);
    std::vector<std::vector<Passage>> curves;
    for (HalfEdge start = 0; start < g.half_edge_count(); ++start) {
        if (used[start]) continue;
        std::vector<Passage> curve;
        HalfEdge in = start;
        do {
            const int v = vertex_of(in);
            const int entry = slot_of(in);
            const int exit = paired_slot(transitions[v], entry);
            used[in] = true;
            used[half_edge(v, exit)] = true;
            curve.push_back({v, entry, exit});
            in = g.mate(half_edge(v, exit));
        } while (in != start);
        curves.push_back(std::move(curve));
    }
    return curves;
}

inline void require_connected(const FramedFourGraph& g, const char* what) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(what) + ": graph is not connected");
}

// Deterministic rotating circuit. Starts from transition A everywhere; while
// the traversal falls into several curves, switches the transition at the
// lowest vertex met by two different curves, which merges those two curves.
inline RotatingCircuit rotating_circuit(const FramedFourGraph& g) {
    require_connected(g, "rotating_circuit");
    if (g.vertex_count() == 0) return {};
    std::vector<Pairing> tr(g.vertex_count(), Pairing::A);
    for (;;) {
        auto curves = trace_curves(g, tr);
        if (curves.size() == 1) return {std::move(tr), std::move(curves.front())};
        std::vector<int> curve_of(g.vertex_count(), -1);
        int lowest = -1;
        for (int c = 0; c < static_cast<int>(curves.size()); ++c)
            for (const Passage& p : curves[c]) {
                if (curve_of[p.vertex] >= 0 && curve_of[p.vertex] != c && (lowest < 0 || p.vertex < lowest)) lowest = p.vertex;
                curve_of[p.vertex] = c;
            }
        // a connected graph always has a vertex shared by two curves
        if (lowest < 0) throw std::logic_error("rotating_circuit: curves do not meet");
        tr[lowest] = other(tr[lowest]);
    }
}

// Builds the circuit for an explicit transition pattern, if it is one curve.
inline std::optional<RotatingCircuit> circuit_from_transitions(const FramedFourGraph& g, std::vector<Pairing> transitions) {
    auto curves = trace_curves(g, transitions);
    if (curves.size() != 1) return std::nullopt;
    return RotatingCircuit{std::move(transitions), std::move(curves.front())};
}

// Every transition pattern forming a single closed traversal.
inline std::vector<RotatingCircuit> all_rotating_circuits(const FramedFourGraph& g) {
    require_connected(g, "all_rotating_circuits");
    const int n = g.vertex_count();
    if (n == 0) return {RotatingCircuit{}};
    if (n > 24) throw std::length_error("all_rotating_circuits: too many vertices to enumerate");
    std::vector<RotatingCircuit> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Pairing> tr(n);
        for (int v = 0; v < n; ++v) tr[v] = ((mask >> v) & 1) ? Pairing::B : Pairing::A;
        if (auto c = circuit_from_transitions(g, std::move(tr))) out.push_back(std::move(*c));
    }
    return out;
}

inline bool is_rotating_circuit(const FramedFourGraph& g, const RotatingCircuit& c) {
    if (!is_connected(g)) return false;
    if (g.vertex_count() == 0) return c.passages.empty() && c.transitions.empty();
    auto rebuilt = circuit_from_transitions(g, c.transitions);
    return rebuilt && *rebuilt == c;
}

// Good at a vertex iff the two passages enter along opposite slots.
inline bool good_at(const RotatingCircuit& c, int vertex) {
    int entries[2], k = 0;
    for (const Passage& p : c.passages)
        if (p.vertex == vertex && k < 2) entries[k++] = p.entry;
    if (k != 2) throw std::invalid_argument("good_at: vertex " + std::to_string(vertex) + " is not passed twice");
    return slots_opposite(entries[0], entries[1]);
}

// D_C(G): chord v is vertex v, placed at its two passages; framed 0 where the
// circuit is good and 1 where it is bad.
inline FramedChordDiagram chord_diagram(const RotatingCircuit& c) {
    const int n = static_cast<int>(c.transitions.size());
    std::vector<int> word;
    std::vector<int> first_entry(n, -1);
    std::vector<std::uint8_t> framing(n, 0);
    for (const Passage& p : c.passages) {
        word.push_back(p.vertex);
        if (first_entry[p.vertex] < 0)
            first_entry[p.vertex] = p.entry;
        else
            framing[p.vertex] = slots_opposite(first_entry[p.vertex], p.entry) ? 0 : 1;
    }
    return FramedChordDiagram(std::move(word), std::move(framing));
}

// Switches the transition at each listed vertex simultaneously. Switching at
// a single bad vertex keeps the traversal in one piece; at a good vertex it
// splits, which is reported as an error. Pairs of linked good vertices can
// be switched together.
inline RotatingCircuit change_transitions(const FramedFourGraph& g, const RotatingCircuit& c, const std::vector<int>& vertices) {
    std::vector<Pairing> tr = c.transitions;
    for (int v : vertices) {
        if (v < 0 || v >= static_cast<int>(tr.size()))
            throw std::out_of_range("change_transition: unknown vertex " + std::to_string(v));
        tr[v] = other(tr[v]);
    }
    auto out = circuit_from_transitions(g, std::move(tr));
    if (!out) throw std::invalid_argument("change_transition: the new transitions split the circuit");
    return std::move(*out);
}

inline RotatingCircuit change_transition(const FramedFourGraph& g, const RotatingCircuit& c, int vertex) {
    return change_transitions(g, c, {vertex});
}

}  // namespace f4g
