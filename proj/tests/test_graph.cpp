#include <gtest/gtest.h>

#include "f4g/canonical.hpp"
#include "f4g/graph.hpp"
#include "f4g/named.hpp"
#include "support.hpp"

using namespace f4g;

TEST(HalfEdges, OppositeAndAdjacentSlots) {
    EXPECT_TRUE(slots_opposite(0, 2));
    EXPECT_TRUE(slots_opposite(1, 3));
    EXPECT_FALSE(slots_opposite(0, 1));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) EXPECT_NE(slots_opposite(a, b), slots_adjacent(a, b));
    EXPECT_EQ(vertex_of(half_edge(5, 3)), 5);
    EXPECT_EQ(slot_of(half_edge(5, 3)), 3);
}

TEST(HalfEdges, PairingsGlueAdjacentSlots) {
    for (int s = 0; s < 4; ++s) {
        for (Pairing p : {Pairing::A, Pairing::B}) {
            EXPECT_TRUE(slots_adjacent(s, paired_slot(p, s)));
            EXPECT_EQ(paired_slot(p, paired_slot(p, s)), s);
        }
        EXPECT_NE(paired_slot(Pairing::A, s), paired_slot(Pairing::B, s));
    }
    EXPECT_EQ(paired_slot(Pairing::A, 0), 1);
    EXPECT_EQ(paired_slot(Pairing::B, 0), 3);
}

TEST(FramedFourGraph, RejectsBadGluings) {
    EXPECT_THROW(FramedFourGraph({1, 0, 3}, 0), std::invalid_argument);
    EXPECT_THROW(FramedFourGraph({0, 2, 1, 3}, 0), std::invalid_argument);
    EXPECT_THROW(FramedFourGraph({1, 2, 3, 0}, 0), std::invalid_argument);
    EXPECT_THROW(FramedFourGraph({1, 0, 3, 9}, 0), std::invalid_argument);
    EXPECT_THROW(FramedFourGraph({}, -1), std::invalid_argument);
    EXPECT_NO_THROW(FramedFourGraph({1, 0, 3, 2}, 2));
}

TEST(FramedFourGraph, GammaShape) {
    const FramedFourGraph g = named_graph("gamma");
    EXPECT_EQ(g.vertex_count(), 1);
    EXPECT_EQ(g.edge_count(), 2);
    // both loops join opposite slots
    EXPECT_EQ(g.mate(0), 2);
    EXPECT_EQ(g.mate(1), 3);
}

TEST(Smooth, GammaGivesOneCircleEitherWay) {
    for (Pairing p : {Pairing::A, Pairing::B}) {
        const FramedFourGraph s = smooth(gamma_graph(), {0, p});
        EXPECT_EQ(s.vertex_count(), 0);
        EXPECT_EQ(s.free_circles(), 1);
    }
}

TEST(Smooth, LoopOnAdjacentSlotsClosesACircle) {
    // one vertex, loops (0,1) and (2,3): pairing A closes both loops
    const FramedFourGraph g({1, 0, 3, 2}, 0);
    EXPECT_EQ(smooth(g, {0, Pairing::A}).free_circles(), 2);
    EXPECT_EQ(smooth(g, {0, Pairing::B}).free_circles(), 1);
}

TEST(Smooth, DoesNotMutateAndChecksVertex) {
    const FramedFourGraph g = delta_graph();
    const FramedFourGraph copy = g;
    (void)smooth(g, {1, Pairing::B});
    EXPECT_EQ(g, copy);
    EXPECT_THROW(smooth(g, {3, Pairing::A}), std::out_of_range);
    EXPECT_EQ(smooth(g, {1, Pairing::B}).vertex_count(), 2);
}

TEST(Smooth, DeltaAtThirdVertexGivesLinkedPair) {
    // realize makes every transition A, so chord 3 is deleted by pairing A
    const FramedFourGraph s = smooth(delta_graph(), {2, Pairing::A});
    const FramedFourGraph want = realize(make_diagram({1, 2, 1, 2}, {0, 0}));
    EXPECT_TRUE(is_isomorphic(s, want));
    EXPECT_TRUE(test::brute_isomorphic(s, want));
}

TEST(SourceSink, NamedExamples) {
    EXPECT_TRUE(source_sink_structures(gamma_graph()).empty());
    EXPECT_EQ(source_sink_structures(FramedFourGraph::circles(1)).size(), 2u);
    EXPECT_EQ(source_sink_structures(delta_graph()).size(), 2u);
    EXPECT_EQ(test::brute_source_sink_count(delta_graph()), 2);
    EXPECT_EQ(test::brute_source_sink_count(gamma_graph()), 0);
}

TEST(SourceSink, StructuresSatisfyTheVertexRule) {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const FramedFourGraph g = realize(test::random_diagram(rng, 1 + i % 5));
        const auto all = source_sink_structures(g);
        EXPECT_EQ(static_cast<int>(all.size()), test::brute_source_sink_count(g));
        for (const auto& s : all) EXPECT_TRUE(is_source_sink(g, s));
    }
}

TEST(SourceSink, DisjointUnionMultiplies) {
    const FramedFourGraph g = disjoint_union(delta_graph(), FramedFourGraph::circles(2));
    EXPECT_EQ(source_sink_structures(g).size(), 8u);
}

TEST(Components, Examples) {
    EXPECT_EQ(components(gamma_graph()).size(), 1u);
    const auto parts = components(disjoint_union(gamma_graph(), FramedFourGraph::circles(1)));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_TRUE(is_isomorphic(parts[0], gamma_graph()));
    EXPECT_EQ(parts[1].free_circles(), 1);
    EXPECT_EQ(parts[1].vertex_count(), 0);
    EXPECT_TRUE(components(FramedFourGraph{}).empty());
}

TEST(Components, UnionRebuildsTheGraph) {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        FramedFourGraph g = realize(test::random_diagram(rng, 1 + i % 3));
        g = disjoint_union(g, realize(test::random_diagram(rng, i % 4)));
        g = disjoint_union(g, FramedFourGraph::circles(i % 2));
        FramedFourGraph rebuilt;
        for (const auto& c : components(g)) rebuilt = disjoint_union(rebuilt, c);
        EXPECT_TRUE(is_isomorphic(rebuilt, g));
        EXPECT_EQ(component_count(g), static_cast<int>(components(g).size()));
    }
}

TEST(Components, DeleteComponentByIndex) {
    const FramedFourGraph g = disjoint_union(disjoint_union(delta_graph(), gamma_graph()), FramedFourGraph::circles(1));
    EXPECT_TRUE(is_isomorphic(delete_component(g, 0), disjoint_union(gamma_graph(), FramedFourGraph::circles(1))));
    EXPECT_TRUE(is_isomorphic(delete_component(g, 2), disjoint_union(delta_graph(), gamma_graph())));
    EXPECT_THROW(delete_component(g, 3), std::out_of_range);
}

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(is_isomorphic(gamma_graph(), gamma_graph()));
    EXPECT_FALSE(is_isomorphic(gamma_graph(), delta_graph()));
    const FramedFourGraph a = realize(make_diagram({1, 2, 1, 2}, {0, 0}));
    const FramedFourGraph b = realize(make_diagram({2, 1, 2, 1}, {0, 0}));
    EXPECT_TRUE(is_isomorphic(a, b));
    EXPECT_TRUE(test::brute_isomorphic(a, b));
    EXPECT_FALSE(is_isomorphic(FramedFourGraph::circles(1), FramedFourGraph::circles(2)));
}

TEST(Isomorphism, FramingMatters) {
    // same underlying 4-regular multigraph, different opposite pairs
    const FramedFourGraph twisted({1, 0, 3, 2}, 0);
    EXPECT_FALSE(is_isomorphic(twisted, gamma_graph()));
    EXPECT_FALSE(test::brute_isomorphic(twisted, gamma_graph()));
}

TEST(Isomorphism, AgreesWithBacktrackingOracle) {
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + i % 3;
        const FramedFourGraph a = realize(test::random_diagram(rng, n));
        const FramedFourGraph b = i % 2 ? test::random_relabel(a, rng) : realize(test::random_diagram(rng, n));
        EXPECT_EQ(is_isomorphic(a, b), test::brute_isomorphic(a, b));
    }
}

TEST(Canonical, InvariantUnderRelabeling) {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        FramedFourGraph g = realize(test::random_diagram(rng, 1 + i % 6));
        if (i % 3 == 0) g = disjoint_union(g, realize(test::random_diagram(rng, 1 + i % 2)));
        const FramedFourGraph h = test::random_relabel(g, rng);
        EXPECT_EQ(canonical_code(g), canonical_code(h));
        EXPECT_EQ(fingerprint(g), fingerprint(h));
    }
}

TEST(Canonical, FingerprintIsSixteenHexDigits) {
    const std::string f = fingerprint(delta_graph());
    EXPECT_EQ(f.size(), 16u);
    EXPECT_EQ(f.find_first_not_of("0123456789abcdef"), std::string::npos);
    EXPECT_NE(f, fingerprint(gamma_graph()));
}
