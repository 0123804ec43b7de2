#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "chord_diagram.hpp"
#include "graph.hpp"

namespace f4g {

/// One vertex, two loops, each joining a pair of opposite slots.
inline FramedFourGraph gamma_graph() { return FramedFourGraph({2, 3, 0, 1}, 0); }

/// Two unlinked chords, both framed 1.
inline FramedChordDiagram gamma1_diagram() { return make_diagram({1, 1, 2, 2}, {1, 1}); }
inline FramedFourGraph gamma1_graph() { return realize(gamma1_diagram()); }

/// Three pairwise linked chords, all framed 0.
inline FramedChordDiagram delta_diagram() { return make_diagram({1, 2, 3, 1, 2, 3}, {0, 0, 0}); }
inline FramedFourGraph delta_graph() { return realize(delta_diagram()); }

/// The (2k+1)-gon: chord i is linked exactly with chords i-1 and i+1
/// (cyclically). Chord 1 is framed 1, the rest 0.
inline FramedChordDiagram odd_gon_diagram(int k) {
    if (k < 1) throw std::invalid_argument("odd_gon: k must be at least 1");
    const int m = 2 * k + 1;
    // 1 m 2 1 3 2 ... m (m-1): each chord i brackets exactly one end of i-1 and i+1
    std::vector<int> labels{1, m};
    for (int i = 2; i <= m; ++i) {
        labels.push_back(i);
        labels.push_back(i - 1);
    }
    std::vector<int> framings(m, 0);
    framings[0] = 1;
    return make_diagram(labels, framings);
}

inline FramedFourGraph odd_gon(int k) { return realize(odd_gon_diagram(k)); }

// Accepts "gamma", "delta", "gamma1" and "odd_gon(k)".
inline FramedFourGraph named_graph(std::string_view name) {
    if (name == "gamma") return gamma_graph();
    if (name == "delta") return delta_graph();
    if (name == "gamma1") return gamma1_graph();
    constexpr std::string_view prefix = "odd_gon(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        const std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == digits.size() && used > 0) return odd_gon(k);
    }
    throw std::invalid_argument("named_graph: unknown graph '" + std::string(name) + "'");
}

}  // namespace f4g
