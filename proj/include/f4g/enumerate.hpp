#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chord_diagram.hpp"
#include "minor.hpp"
#include "named.hpp"
#include "obstructions.hpp"

namespace f4g {

// Calls f(word) for every perfect matching of 2n points on the core, chords
// numbered by first occurrence. There are (2n-1)!! of them.
inline void for_each_matching(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> word(2 * n, -1);
    std::function<void(int)> place = [&](int next) {
        int p = 0;
        while (p < 2 * n && word[p] >= 0) ++p;
        if (p == 2 * n) {
            f(word);
            return;
        }
        word[p] = next;
        for (int q = p + 1; q < 2 * n; ++q) {
            if (word[q] >= 0) continue;
            word[q] = next;
            place(next + 1);
            word[q] = -1;
        }
        word[p] = -1;
    };
    place(0);
}

struct DiagramCorpus {
    std::int64_t labeled = 0;  // matchings x framings, before deduplication
    std::vector<FramedChordDiagram> diagrams;
};

// Every framed chord diagram with min_chords..max_chords chords, deduplicated
// up to rotation and relabeling, in a deterministic order.
inline DiagramCorpus enumerate_diagrams(int max_chords, int min_chords = 0) {
    DiagramCorpus out;
    for (int n = min_chords; n <= max_chords; ++n) {
        std::set<std::pair<std::vector<int>, std::vector<std::uint8_t>>> seen;
        for_each_matching(n, [&](const std::vector<int>& word) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                ++out.labeled;
                std::vector<std::uint8_t> framings(n);
                for (int c = 0; c < n; ++c) framings[c] = (mask >> c) & 1;
                const FramedChordDiagram canon = canonical_diagram(FramedChordDiagram(word, framings));
                if (seen.emplace(canon.word(), canon.framings()).second) out.diagrams.push_back(canon);
            }
        });
    }
    return out;
}

struct VerifyReport {
    std::int64_t labeled = 0;
    std::int64_t distinct = 0;
    std::int64_t planarity_disagreements = 0;
    std::int64_t rp2_disagreements = 0;
    std::int64_t nonplanar = 0;
    std::int64_t not_embeddable = 0;
    std::optional<std::string> first_disagreement;

    std::int64_t disagreements() const { return planarity_disagreements + rp2_disagreements; }
};

// Cross-checks the deciders against brute-force oracles on every diagram with
// at most max_chords chords: planarity against the two-cycle search and
// against Gamma/Delta minors, RP^2 against Delta/Gamma1 minors. Emitted
// obstruction witnesses are replayed as part of the check.
inline VerifyReport verify_deciders(int max_chords, bool check_two_cycles = true) {
    enum { gamma_bit = 1, delta_bit = 2, gamma1_bit = 4 };
    MinorOracle oracle({gamma_graph(), delta_graph(), gamma1_graph()});
    const DiagramCorpus corpus = enumerate_diagrams(max_chords);
    VerifyReport r;
    r.labeled = corpus.labeled;
    r.distinct = static_cast<std::int64_t>(corpus.diagrams.size());
    for (const auto& d : corpus.diagrams) {
        const FramedFourGraph g = realize(d);
        const std::uint32_t profile = oracle.profile(g);
        const PlanarityVerdict planar = is_planar(g);
        const Rp2Verdict rp2 = rp2_checkerboard_embeddable(g);
        const bool oracle_planar = (profile & (gamma_bit | delta_bit)) == 0;
        const bool oracle_rp2 = (profile & (delta_bit | gamma1_bit)) == 0;
        bool planar_ok = planar.planar == oracle_planar;
        if (check_two_cycles) planar_ok = planar_ok && gamma_s_minor_witness(g).has_value() == !planar.planar;
        const bool rp2_ok = rp2.embeddable == oracle_rp2;
        r.nonplanar += !planar.planar;
        r.not_embeddable += !rp2.embeddable;
        r.planarity_disagreements += !planar_ok;
        r.rp2_disagreements += !rp2_ok;
        if ((!planar_ok || !rp2_ok) && !r.first_disagreement) {
            std::ostringstream os;
            os << to_string(d) << ": planar=" << planar.planar << " oracle_planar=" << oracle_planar
               << " rp2=" << rp2.embeddable << " oracle_rp2=" << oracle_rp2;
            r.first_disagreement = os.str();
        }
    }
    return r;
}

}  // namespace f4g
