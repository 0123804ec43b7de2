#include <gtest/gtest.h>

#include "f4g/enumerate.hpp"
#include "f4g/minor.hpp"
#include "f4g/named.hpp"
#include "support.hpp"

using namespace f4g;

TEST(AllSmoothings, Examples) {
    const auto g = all_smoothings(gamma_graph());
    ASSERT_EQ(g.size(), 2u);
    for (const auto& [choice, child] : g) EXPECT_TRUE(is_isomorphic(child, FramedFourGraph::circles(1)));
    EXPECT_TRUE(all_smoothings(FramedFourGraph::circles(1)).empty());
    EXPECT_EQ(all_smoothings(delta_graph()).size(), 6u);
}

TEST(HasMinor, Examples) {
    EXPECT_FALSE(has_minor(delta_graph(), gamma_graph()).has_value());
    const auto g1 = has_minor(gamma1_graph(), gamma_graph());
    ASSERT_TRUE(g1.has_value());
    EXPECT_EQ(g1->steps.size(), 1u);
    EXPECT_TRUE(verify_minor_witness(gamma1_graph(), gamma_graph(), *g1));
    const auto p3 = has_minor(odd_gon(1), gamma1_graph());
    ASSERT_TRUE(p3.has_value());
    EXPECT_TRUE(verify_minor_witness(odd_gon(1), gamma1_graph(), *p3));
}

TEST(HasMinor, ReflexiveWithEmptyWitness) {
    for (const auto& g : {gamma_graph(), delta_graph(), gamma1_graph(), FramedFourGraph::circles(2)}) {
        const auto w = has_minor(g, g);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(w->steps.empty());
    }
}

TEST(HasMinor, WitnessFingerprints) {
    const auto w = *has_minor(odd_gon(1), gamma1_graph());
    EXPECT_EQ(w.source_fingerprint, fingerprint(odd_gon(1)));
    EXPECT_EQ(w.target_fingerprint, fingerprint(gamma1_graph()));
}

TEST(HasMinor, DeletesComponents) {
    const FramedFourGraph g = disjoint_union(delta_graph(), disjoint_union(gamma_graph(), FramedFourGraph::circles(1)));
    const auto w = has_minor(g, gamma_graph());
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_minor_witness(g, gamma_graph(), *w));
    EXPECT_TRUE(has_minor(g, FramedFourGraph{}).has_value());
}

TEST(HasMinor, WitnessesReplayAcrossTheClosure) {
    // deletions also drop vertices, so smoothings never exceed the difference
    std::mt19937 rng(41);
    for (int i = 0; i < 40; ++i) {
        const FramedFourGraph g = realize(test::random_diagram(rng, 2 + i % 3));
        const auto closure = minor_closure(g);
        const FramedFourGraph& target = closure[rng() % closure.size()];
        const auto w = has_minor(g, target);
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(verify_minor_witness(g, target, *w));
        EXPECT_LE(smoothing_count(*w), g.vertex_count() - target.vertex_count());
    }
}

TEST(HasMinor, Transitive) {
    std::mt19937 rng(43);
    for (int i = 0; i < 30; ++i) {
        const FramedFourGraph a = realize(test::random_diagram(rng, 3 + i % 2));
        const auto ca = minor_closure(a);
        const FramedFourGraph& b = ca[rng() % ca.size()];
        const auto cb = minor_closure(b);
        const FramedFourGraph& c = cb[rng() % cb.size()];
        const auto ab = has_minor(a, b);
        const auto bc = has_minor(b, c);
        ASSERT_TRUE(ab && bc);
        auto steps = ab->steps;
        steps.insert(steps.end(), bc->steps.begin(), bc->steps.end());
        EXPECT_TRUE(is_isomorphic(replay(a, steps), c));
        EXPECT_TRUE(has_minor(a, c).has_value());
    }
}

TEST(MinorOracle, MatchesDirectSearch) {
    MinorOracle oracle({gamma_graph(), delta_graph(), gamma1_graph()});
    for (const auto& d : enumerate_diagrams(3).diagrams) {
        const FramedFourGraph g = realize(d);
        const std::uint32_t p = oracle.profile(g);
        EXPECT_EQ((p & 1) != 0, has_minor(g, gamma_graph()).has_value());
        EXPECT_EQ((p & 2) != 0, has_minor(g, delta_graph()).has_value());
        EXPECT_EQ((p & 4) != 0, has_minor(g, gamma1_graph()).has_value());
    }
    EXPECT_GT(oracle.memo_size(), 0u);
}

TEST(SMinor, Examples) {
    const auto w = has_s_minor(delta_graph(), gamma_graph());
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->smoothings.empty());
    EXPECT_TRUE(verify_s_minor_witness(delta_graph(), gamma_graph(), *w));

    for (const auto& g : {gamma_graph(), delta_graph(), gamma1_graph()}) {
        const auto self = has_s_minor(g, g);
        ASSERT_TRUE(self.has_value());
        EXPECT_EQ(static_cast<int>(self->kept_edges.size()), g.edge_count());
        EXPECT_TRUE(self->smoothings.empty());
    }
    EXPECT_FALSE(has_s_minor(FramedFourGraph::circles(1), gamma_graph()).has_value());
}

TEST(SMinor, EvenSubgraphSuppressesAndCloses) {
    // keep one loop of Gamma: the vertex has valency 2 and the loop closes up
    std::vector<int> suppressed;
    const FramedFourGraph c = even_subgraph(gamma_graph(), {0}, &suppressed);
    EXPECT_EQ(c.vertex_count(), 0);
    EXPECT_EQ(c.free_circles(), 1);
    EXPECT_EQ(suppressed, (std::vector<int>{0}));
    EXPECT_THROW(even_subgraph(delta_graph(), {0}), std::invalid_argument);
}

TEST(SMinor, MinorImpliesSMinor) {
    const auto corpus = enumerate_diagrams(3);
    std::vector<FramedFourGraph> graphs;
    for (const auto& d : corpus.diagrams) graphs.push_back(realize(d));
    for (const auto& g : graphs)
        for (const auto& p : {gamma_graph(), delta_graph(), gamma1_graph()})
            if (has_minor(g, p)) EXPECT_TRUE(has_s_minor(g, p).has_value());
    EXPECT_FALSE(has_minor(delta_graph(), gamma_graph()).has_value());
    EXPECT_TRUE(has_s_minor(delta_graph(), gamma_graph()).has_value());
}

TEST(SMinor, WitnessesReplay) {
    std::mt19937 rng(47);
    for (int i = 0; i < 40; ++i) {
        const FramedFourGraph g = realize(test::random_diagram(rng, 1 + i % 4));
        for (const auto& p : {gamma_graph(), gamma1_graph()})
            if (auto w = has_s_minor(g, p)) EXPECT_TRUE(verify_s_minor_witness(g, p, *w));
    }
}
