#include <gtest/gtest.h>

#include "latframe/classical.hpp"
#include "latframe/coordinates.hpp"
#include "test_support.hpp"

using namespace latframe;
using latframe::testing::clique;
using latframe::testing::route;
using latframe::testing::texts;

namespace {

std::vector<int> values(const CubicalCoordinates& c) { return c.values; }

}  // namespace

TEST(Cornering, Oruga2Examples) {
    const RouteCatalog catalog(oruga(2));
    const auto& g = catalog.graph();
    const auto c1 = g.left_corners()[0];
    const auto bottom = catalog.routes_of(clique(catalog, "u1-u2, u1-d2, d1-d2"));
    const auto top = catalog.routes_of(clique(catalog, "u1-u2, d1-u2, d1-d2"));
    const auto low = cornering_routes(g, bottom, c1);
    EXPECT_EQ(low.lower, route(g, "u1-d2"));
    EXPECT_EQ(low.upper, route(g, "d1-d2"));
    const auto high = cornering_routes(g, top, c1);
    EXPECT_EQ(high.lower, route(g, "u1-u2"));
    EXPECT_EQ(high.upper, route(g, "d1-u2"));
}

TEST(Cornering, LowerRouteIsNeverSharedBetweenCorners) {
    const auto L = FramingLattice::build(caracol(4));
    const auto& g = L.graph();
    for (const auto& element : L.elements()) {
        const auto routes = L.catalog().routes_of(element);
        std::vector<GeneralizedRoute> lowers, uppers;
        for (const auto& c : g.left_corners()) {
            const auto pair = cornering_routes(g, routes, c);
            EXPECT_EQ(std::count(lowers.begin(), lowers.end(), pair.lower), 0);
            EXPECT_EQ(std::count(uppers.begin(), uppers.end(), pair.upper), 0);
            lowers.push_back(pair.lower);
            uppers.push_back(pair.upper);
        }
    }
}

TEST(Coordinates, Oruga2) {
    const auto L = FramingLattice::build(oruga(2));
    EXPECT_EQ(values(ccl(L.catalog(), L.element(L.bottom()))), (std::vector<int>{0}));
    EXPECT_EQ(values(ccl(L.catalog(), L.element(L.top()))), (std::vector<int>{1}));
    const CornerRanks ranks(L.graph());
    EXPECT_EQ(texts(L.graph(), ranks.routes(0)),
              (std::vector<std::string>{"[1:u1|d1>·d2", "[1:u1|d1>·u2"}));
}

TEST(Coordinates, Oruga3Examples) {
    const RouteCatalog catalog(oruga(3));
    EXPECT_EQ(values(ccl(catalog, perm_to_clique(catalog, {3, 2, 1}))), (std::vector<int>{3, 1}));
    EXPECT_EQ(values(ccl(catalog, perm_to_clique(catalog, {2, 1, 3}))), (std::vector<int>{2, 0}));
    EXPECT_EQ(values(ccl(catalog, perm_to_clique(catalog, {1, 2, 3}))), (std::vector<int>{0, 0}));
}

TEST(Coordinates, BottomIsZeroAndTopIsMaximal) {
    for (const auto& g : {oruga(4), caracol(4), reflect_ud(caracol(3))}) {
        const auto L = FramingLattice::build(g);
        const CornerRanks ranks(g);
        const auto all = all_ccl(L);
        for (std::size_t k = 0; k < all[0].values.size(); ++k) {
            EXPECT_EQ(all[static_cast<std::size_t>(L.bottom())].values[k], 0);
            EXPECT_EQ(all[static_cast<std::size_t>(L.top())].values[k], ranks.route_count(static_cast<int>(k)) - 1);
        }
    }
}

TEST(Coordinates, CoversRaiseExactlyOneCoordinate) {
    for (const auto& g : {oruga(4), caracol(4)}) {
        const auto L = FramingLattice::build(g);
        const auto left = all_ccl(L);
        const auto right = all_ccr(L);
        for (const auto& cover : L.covers()) {
            const auto& a = left[static_cast<std::size_t>(cover.lower)].values;
            const auto& b = left[static_cast<std::size_t>(cover.upper)].values;
            int changed = 0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k] != b[k]) {
                    ++changed;
                    EXPECT_LT(a[k], b[k]);
                    EXPECT_EQ(L.graph().left_corners()[k], *cover.label.left);
                }
            }
            EXPECT_EQ(changed, 1);
            const auto& ra = right[static_cast<std::size_t>(cover.lower)].values;
            const auto& rb = right[static_cast<std::size_t>(cover.upper)].values;
            int right_changed = 0;
            for (std::size_t k = 0; k < ra.size(); ++k) right_changed += ra[k] != rb[k];
            EXPECT_EQ(right_changed, 1);
        }
    }
}

TEST(Coordinates, ComparisonMatchesTheOrder) {
    for (const auto& g : {oruga(3), oruga(4), caracol(4)}) {
        const auto L = FramingLattice::build(g);
        for (int x = 0; x < L.size(); ++x)
            for (int y = 0; y < L.size(); ++y) {
                const bool leq = L.leq(x, y);
                ASSERT_EQ(leq_by_coordinates(L.catalog(), L.element(x), L.element(y)), leq);
                ASSERT_EQ(!not_leq_witness(L.catalog(), L.element(x), L.element(y)), leq);
            }
    }
}

TEST(Coordinates, WitnessOnOruga2) {
    const RouteCatalog catalog(oruga(2));
    const auto bottom = clique(catalog, "u1-u2, u1-d2, d1-d2");
    const auto top = clique(catalog, "u1-u2, d1-u2, d1-d2");
    EXPECT_FALSE(not_leq_witness(catalog, bottom, top));
    const auto w = not_leq_witness(catalog, top, bottom);
    ASSERT_TRUE(w);
    EXPECT_EQ(catalog.route(w->route), route(catalog.graph(), "d1-u2"));
    EXPECT_EQ(catalog.route(w->other_route), route(catalog.graph(), "u1-d2"));
    EXPECT_EQ(w->vertex, 2);
}

TEST(LeftClockwise, Oruga2) {
    const RouteCatalog catalog(oruga(2));
    const auto& g = catalog.graph();
    const auto top = catalog.routes_of(clique(catalog, "u1-u2, d1-u2, d1-d2"));
    const auto bottom = catalog.routes_of(clique(catalog, "u1-u2, u1-d2, d1-d2"));
    EXPECT_EQ(left_clockwise_bricks(g, top), enumerate_bricks(g));
    EXPECT_TRUE(left_clockwise_bricks(g, bottom).empty());
    EXPECT_TRUE(is_clockwise_at(g, enumerate_bricks(g)[0], route(g, "d1-u2"), 2));
}

TEST(LeftClockwise, CountsEqualCoordinatesAndSetsAreNested) {
    const auto L = FramingLattice::build(caracol(4));
    const auto& g = L.graph();
    const auto coords = all_ccl(L);
    std::vector<std::vector<GeneralizedRoute>> sets;
    for (int x = 0; x < L.size(); ++x) {
        const auto routes = L.catalog().routes_of(L.element(x));
        for (std::size_t k = 0; k < g.left_corners().size(); ++k)
            EXPECT_EQ(static_cast<int>(left_clockwise_at(g, routes, g.left_corners()[k]).size()),
                      coords[static_cast<std::size_t>(x)].values[k]);
        sets.push_back(left_clockwise_bricks(g, routes));
    }
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y) {
            const auto& a = sets[static_cast<std::size_t>(x)];
            const auto& b = sets[static_cast<std::size_t>(y)];
            EXPECT_EQ(std::includes(b.begin(), b.end(), a.begin(), a.end()), L.leq(x, y));
        }
}
