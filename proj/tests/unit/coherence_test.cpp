#include <gtest/gtest.h>

#include "latframe/coherence.hpp"
#include "test_support.hpp"

using namespace latframe;
using latframe::testing::edge;
using latframe::testing::route;
using latframe::testing::texts;

TEST(Routes, CountsOnSmallGraphs) {
    EXPECT_EQ(enumerate_routes(oruga(3)).size(), 8u);
    EXPECT_EQ(enumerate_routes(caracol(2)).size(), 4u);
    EXPECT_EQ(enumerate_routes(parse_framed_graph("vertices 2\nedge a 1 2\n")).size(), 1u);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_routes(oruga(n)).size(), std::size_t{1} << n);
}

TEST(Routes, EnumerationIsSortedByEdgeIndices) {
    const auto g = caracol(2);
    EXPECT_EQ(texts(g, enumerate_routes(g)),
              (std::vector<std::string>{"p0-p1-p2-p3", "p0-p1-t2", "s2-p2-p3", "s2-t2"}));
}

TEST(Routes, MakeRouteValidatesEnds) {
    const auto g = oruga(2);
    EXPECT_NO_THROW(make_route(g, {edge(g, "u1"), edge(g, "d2")}));
    EXPECT_THROW(make_route(g, {edge(g, "u1")}), std::invalid_argument);
    EXPECT_THROW(make_route(g, {edge(g, "u2"), edge(g, "u1")}), std::invalid_argument);
    const auto corner = g.left_corners()[0];
    EXPECT_THROW(make_brick(g, corner, {}, corner), std::invalid_argument);
    EXPECT_NO_THROW(make_brick(g, corner, {}, g.right_corners()[0]));
}

TEST(Routes, NotationRoundTrips) {
    const auto g = caracol(3);
    for (const auto& s : enumerate_bricks(g)) EXPECT_EQ(parse_route(g, format_route(g, s)), s);
    for (const auto& s : enumerate_left_cornered_routes(g)) EXPECT_EQ(parse_route(g, format_route(g, s)), s);
    for (const auto& s : enumerate_right_cornered_routes(g)) EXPECT_EQ(parse_route(g, format_route(g, s)), s);
    const auto g2 = oruga(2);
    EXPECT_EQ(format_route(g2, enumerate_bricks(g2)[0]), "[1:u1|d1>·<u2|d2:1]");
    EXPECT_EQ(parse_route(g2, "[1:u1|d1>.<u2|d2:1]"), enumerate_bricks(g2)[0]);
    EXPECT_THROW(parse_route(g2, "u1-zz"), std::invalid_argument);
}

TEST(Routes, KindsAndVertices) {
    const auto g = oruga(2);
    const auto b = enumerate_bricks(g)[0];
    EXPECT_EQ(kind_of(b), RouteKind::brick);
    EXPECT_EQ(path_vertices(g, b), (std::vector<Vertex>{2}));
    EXPECT_EQ(kind_of(route(g, "u1-u2")), RouteKind::route);
    EXPECT_EQ(path_vertices(g, route(g, "u1-u2")), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(kind_of(route(g, "[1:u1|d1>·u2")), RouteKind::left_cornered);
}

TEST(Bricks, CountsOnOruga) {
    const std::vector<std::size_t> expected{0, 1, 4, 11, 26};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_bricks(oruga(n)).size(), expected[static_cast<std::size_t>(n - 1)]);
}

TEST(Letters, CornerSitsBetweenItsEdges) {
    const auto g = oruga(2);
    const Vertex v = 2;
    const auto c = g.left_corners()[0];
    const Letter u1 = edge(g, "u1"), d1 = edge(g, "d1"), corner = c;
    EXPECT_EQ(extended_letter_compare(g, v, Side::incoming, u1, corner), std::strong_ordering::less);
    EXPECT_EQ(extended_letter_compare(g, v, Side::incoming, corner, d1), std::strong_ordering::less);
    EXPECT_EQ(extended_letter_compare(g, v, Side::incoming, corner, corner), std::strong_ordering::equal);
    EXPECT_THROW(extended_letter_compare(g, v, Side::outgoing, u1, d1), std::invalid_argument);
}

TEST(Preorder, ComparesWordsAwayFromTheVertex) {
    const auto g = oruga(3);
    const Vertex v = 2;  // external label 1
    const auto a = route(g, "u1-u2-d3"), b = route(g, "u1-d2-u3"), c = route(g, "d1-u2-u3");
    EXPECT_EQ(cmp_preorder(g, v, Side::outgoing, a, b), std::strong_ordering::less);
    EXPECT_EQ(cmp_preorder(g, v, Side::incoming, a, b), std::strong_ordering::equal);
    EXPECT_EQ(cmp_preorder(g, v, Side::incoming, a, c), std::strong_ordering::less);
    // Further away letters only break ties.
    EXPECT_EQ(cmp_preorder(g, 3, Side::incoming, route(g, "u1-u2-u3"), route(g, "d1-u2-u3")), std::strong_ordering::less);
    EXPECT_THROW(cmp_preorder(g, v, Side::outgoing, a, route(g, "u1")), std::invalid_argument);
}

TEST(Coherence, ClockwiseCrossingOnOruga2) {
    const auto g = oruga(2);
    const auto a = route(g, "u1-d2"), b = route(g, "d1-u2");
    EXPECT_TRUE(is_clockwise_at(g, a, b, 2));
    EXPECT_FALSE(is_clockwise_at(g, b, a, 2));
    EXPECT_EQ(coherence(g, a, b), CoherenceVerdict{FirstClockwiseAt{2}});
    EXPECT_EQ(coherence(g, b, a), CoherenceVerdict{SecondClockwiseAt{2}});
    EXPECT_TRUE(coherent(g, route(g, "u1-u2"), a));
    EXPECT_TRUE(coherent(g, route(g, "d1-d2"), b));
    EXPECT_TRUE(coherent(g, a, a));
}

TEST(Coherence, SharedCornersAreOnlyWeaklyCoherent) {
    const auto g = oruga(2);
    const auto s = route(g, "[1:u1|d1>·u2"), t = route(g, "[1:u1|d1>·d2");
    const auto verdict = coherence(g, s, t);
    ASSERT_TRUE(std::holds_alternative<SharedLeftCorner>(verdict));
    EXPECT_FALSE(is_coherent(verdict));
    EXPECT_TRUE(is_weakly_coherent(verdict));
    const auto brick = enumerate_bricks(g)[0];
    EXPECT_FALSE(coherent(g, brick, brick));
    EXPECT_TRUE(weakly_coherent(g, brick, brick));
}

TEST(Coherence, IsSymmetric) {
    const auto g = caracol(3);
    const auto routes = enumerate_routes(g);
    const auto bricks = enumerate_bricks(g);
    for (const auto& a : routes)
        for (const auto& b : bricks) EXPECT_EQ(coherent(g, a, b), coherent(g, b, a));
}

TEST(Conflicts, OneSubroutePerCrossing) {
    const auto g = oruga(3);
    const auto conflicts = conflict_subroutes(g, route(g, "u1-d2-u3"), route(g, "d1-u2-u3"));
    ASSERT_EQ(conflicts.size(), 1u);
    EXPECT_TRUE(conflicts[0].edges.empty());
    EXPECT_EQ(conflicts[0].start, 2);
    EXPECT_EQ(conflicts[0].end, 2);
    EXPECT_TRUE(conflict_subroutes(g, route(g, "u1-u2-u3"), route(g, "d1-d2-d3")).empty());
    const auto long_conflict = conflict_subroutes(g, route(g, "u1-u2-d3"), route(g, "d1-u2-u3"));
    ASSERT_EQ(long_conflict.size(), 1u);
    EXPECT_EQ(long_conflict[0].edges, (std::vector<EdgeIndex>{edge(g, "u2")}));
}
