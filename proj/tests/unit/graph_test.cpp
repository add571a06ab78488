#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "latframe/graph.hpp"
#include "test_support.hpp"

using namespace latframe;
using latframe::testing::edge;

namespace {

const char* kOruga2 = R"(# oruga(2)
vertices 3 base0
edge u1 0 1
edge d1 0 1
edge u2 1 2
edge d2 1 2
in 1: u1 d1
out 1: u2 d2
)";

std::vector<std::string> ids(const FramedGraph& g, std::span<const EdgeIndex> order) {
    std::vector<std::string> out;
    for (auto e : order) out.push_back(g.edge(e).id);
    return out;
}

}  // namespace

TEST(ParseFramedGraph, ReadsOruga2) {
    const auto g = parse_framed_graph(kOruga2);
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_EQ(g.base(), 0);
    EXPECT_EQ(g, oruga(2));
}

TEST(ParseFramedGraph, CaracolTextHasSixVerticesAndNineEdges) {
    const auto g = parse_framed_graph(serialize(caracol(3)));
    EXPECT_EQ(g.vertex_count(), 6);
    EXPECT_EQ(g.edge_count(), 9);
}

TEST(ParseFramedGraph, RejectsEdgeGoingBackwards) {
    EXPECT_THROW(parse_framed_graph("vertices 2\nedge a 2 1\n"), ValidationError);
    EXPECT_THROW(parse_framed_graph("vertices 2\nedge a 1 1\n"), ValidationError);
}

TEST(ParseFramedGraph, RejectsDuplicateEdgeId) {
    EXPECT_THROW(parse_framed_graph("vertices 2\nedge a 1 2\nedge a 1 2\n"), ValidationError);
}

TEST(ParseFramedGraph, RejectsFramingThatIsNotAPermutation) {
    const std::string text = "vertices 3\nedge a 1 2\nedge b 1 2\nedge c 2 3\nin 2: a\n";
    EXPECT_THROW(parse_framed_graph(text), ValidationError);
}

TEST(ParseFramedGraph, SyntaxErrorsCarryTheLineNumber) {
    try {
        parse_framed_graph("vertices 3\n# fine\nedge a 1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(parse_framed_graph("edge a 1 2\n"), ParseError);
    EXPECT_THROW(parse_framed_graph("vertices 2\nbogus\n"), ParseError);
    EXPECT_THROW(parse_framed_graph("vertices 2 base7\n"), ParseError);
    EXPECT_THROW(parse_framed_graph("vertices 2\nedge a 1 3\n"), ParseError);
}

TEST(ParseFramedGraph, MissingFramingDefaultsToDeclarationOrder) {
    const auto g = parse_framed_graph("vertices 3\nedge b 1 2\nedge a 1 2\nedge c 2 3\nedge d 2 3\n");
    EXPECT_EQ(ids(g, g.in_order(2)), (std::vector<std::string>{"b", "a"}));
    EXPECT_EQ(ids(g, g.out_order(2)), (std::vector<std::string>{"c", "d"}));
}

TEST(ParseFramedGraph, RejectsIsolatedVertices) {
    EXPECT_THROW(parse_framed_graph("vertices 3\nedge a 1 2\n"), ValidationError);
}

TEST(ParseFramedGraph, SerializationRoundTripsByteStably) {
    for (const auto& g : {oruga(1), oruga(3), caracol(2), caracol(3), reflect_lr(caracol(3))}) {
        const auto text = serialize(g);
        const auto back = parse_framed_graph(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(serialize(back), text);
    }
}

TEST(ParseFramedGraph, ShippedCorpusFilesLoad) {
    for (const char* name : {"oruga2.fg", "oruga3.fg", "caracol3.fg", "diamond.fg", "random10.fg"}) {
        const auto g = load_framed_graph(std::string(LATFRAME_CORPUS_DIR) + "/" + name);
        EXPECT_GT(g.edge_count(), 0) << name;
    }
    EXPECT_EQ(load_framed_graph(std::string(LATFRAME_CORPUS_DIR) + "/oruga2.fg"), oruga(2));
    EXPECT_EQ(load_framed_graph(std::string(LATFRAME_CORPUS_DIR) + "/caracol3.fg"), caracol(3));
}

TEST(Reflections, UpDownReversesEveryFraming) {
    const auto g = oruga(2);
    const auto r = reflect_ud(g);
    EXPECT_EQ(ids(r, r.in_order(2)), (std::vector<std::string>{"d1", "u1"}));
    EXPECT_EQ(ids(r, r.out_order(2)), (std::vector<std::string>{"d2", "u2"}));
    EXPECT_EQ(reflect_ud(r), g);
}

TEST(Reflections, LeftRightMirrorsVerticesAndSwapsSides) {
    const auto g = caracol(3);
    const auto r = reflect_lr(g);
    const auto p0 = edge(r, "p0");
    EXPECT_EQ(r.edge(p0).tail, 6 + 1 - g.edge(edge(g, "p0")).head);
    EXPECT_EQ(r.edge(p0).head, 6 + 1 - g.edge(edge(g, "p0")).tail);
    EXPECT_EQ(reflect_lr(r), g);
    EXPECT_EQ(r.left_corners().size(), g.right_corners().size());
}

TEST(Reflections, Commute) {
    for (const auto& g : {oruga(3), caracol(3)})
        EXPECT_TRUE(same_up_to_edge_order(reflect_ud(reflect_lr(g)), reflect_lr(reflect_ud(g))));
}

TEST(Reflections, OrugaIsIsomorphicToItsMirror) {
    for (int n = 1; n <= 5; ++n) {
        const auto g = oruga(n);
        const auto renamed = relabel_edges(reflect_lr(g), [n](const std::string& id) {
            return id.substr(0, 1) + std::to_string(n + 1 - std::stoi(id.substr(1)));
        });
        EXPECT_TRUE(same_up_to_edge_order(renamed, g)) << "n = " << n;
    }
}

TEST(Families, OrugaCorners) {
    const auto g = oruga(2);
    ASSERT_EQ(g.left_corners().size(), 1u);
    ASSERT_EQ(g.right_corners().size(), 1u);
    const auto l = g.left_corners()[0];
    EXPECT_EQ(g.external_label(l.apex), 1);
    EXPECT_EQ(l.lower, edge(g, "u1"));
    EXPECT_EQ(l.upper, edge(g, "d1"));
    const auto r = g.right_corners()[0];
    EXPECT_EQ(r.lower, edge(g, "u2"));
    EXPECT_EQ(r.upper, edge(g, "d2"));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(oruga(n).left_corners().size(), static_cast<std::size_t>(n - 1));
    EXPECT_TRUE(oruga(1).left_corners().empty());
    EXPECT_TRUE(oruga(1).right_corners().empty());
}

TEST(Families, CaracolShape) {
    const auto g3 = caracol(3);
    EXPECT_EQ(g3.edge_count(), 9);
    EXPECT_EQ(g3.clique_size(), 5);
    std::vector<int> apexes;
    for (const auto& c : g3.left_corners()) apexes.push_back(g3.external_label(c.apex));
    EXPECT_EQ(apexes, (std::vector<int>{2, 3}));

    // The constructor gives caracol(2) six edges, hence cliques of size 3.
    const auto g2 = caracol(2);
    EXPECT_EQ(g2.edge_count(), 6);
    EXPECT_EQ(g2.clique_size(), 3);

    for (int n = 2; n <= 5; ++n) {
        const auto g = caracol(n);
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (!g.is_internal(v)) continue;
            EXPECT_LE(g.in_order(v).size(), 2u);
            EXPECT_LE(g.out_order(v).size(), 2u);
            EXPECT_EQ(g.edge(g.in_order(v)[0]).id[0], 'p');
            EXPECT_EQ(g.edge(g.out_order(v)[0]).id[0], 'p');
        }
    }
}

TEST(Families, CornerCountFormula) {
    for (const auto& g : {oruga(4), caracol(4), parse_framed_graph(kOruga2)}) {
        std::size_t left = 0;
        for (Vertex v = 1; v <= g.vertex_count(); ++v)
            if (g.is_internal(v)) left += g.in_order(v).size() - 1;
        EXPECT_EQ(g.left_corners().size(), left);
    }
}

TEST(Families, CornerLookup) {
    const auto g = oruga(3);
    const auto c = g.left_corners()[1];
    EXPECT_EQ(g.corner_index(c), 1);
    EXPECT_EQ(g.corner_between(c.apex, Side::incoming, c.lower, c.upper), c);
    EXPECT_EQ(g.corner_between(c.apex, Side::incoming, c.upper, c.lower), c);
    EXPECT_FALSE(g.corner_between(c.apex, Side::outgoing, c.lower, c.upper));
}
