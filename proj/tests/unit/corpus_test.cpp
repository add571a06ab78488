#include <gtest/gtest.h>

#include "latframe/corpus.hpp"
#include "latframe/lattice.hpp"

using namespace latframe;

TEST(RandomGraphs, AreDeterministicPerSeed) {
    const RandomGraphParams params{42, 5, 8};
    EXPECT_EQ(random_framed_graph(params), random_framed_graph(params));
    EXPECT_NE(serialize(random_framed_graph(params)), serialize(random_framed_graph({43, 5, 8})));
}

TEST(RandomGraphs, RespectTheLayout) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_framed_graph({seed, 3 + static_cast<int>(seed % 4), 9});
        EXPECT_EQ(g.source_count(), 1);
        for (const auto& e : g.edges()) {
            EXPECT_LT(e.tail, e.head);
            EXPECT_LE(e.head - e.tail, 2);
        }
        for (Vertex v = 2; v <= g.vertex_count(); ++v) EXPECT_FALSE(g.is_source(v));
        EXPECT_EQ(parse_framed_graph(serialize(g)), g);
    }
}

TEST(BuiltinGraphs, ParseSpecs) {
    EXPECT_EQ(builtin_graph("oruga:3"), oruga(3));
    EXPECT_EQ(builtin_graph("caracol:2"), caracol(2));
    EXPECT_EQ(builtin_graph("random:7,4,6"), random_framed_graph({7, 4, 6}));
    EXPECT_TRUE(is_builtin_spec("oruga:3"));
    EXPECT_FALSE(is_builtin_spec("corpus/oruga2.fg"));
    EXPECT_THROW(builtin_graph("oruga:x"), std::invalid_argument);
    EXPECT_THROW(builtin_graph("pentagon:3"), std::invalid_argument);
    EXPECT_THROW(builtin_graph("caracol:1"), std::invalid_argument);
}

TEST(ReferenceCorpus, IsStableAndNontrivial) {
    const auto a = reference_corpus(10);
    const auto b = reference_corpus(10);
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(a.size(), 15u);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].name, b[k].name);
        EXPECT_EQ(a[k].graph, b[k].graph);
        EXPECT_FALSE(enumerate_bricks(a[k].graph).empty()) << a[k].name;
        EXPECT_LE(enumerate_routes(a[k].graph).size(), 512u);
    }
}
