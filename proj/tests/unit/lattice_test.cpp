#include <gtest/gtest.h>

#include "latframe/classical.hpp"
#include "latframe/invariants.hpp"
#include "latframe/lattice.hpp"
#include "test_support.hpp"

using namespace latframe;
using latframe::testing::clique;
using latframe::testing::route;

namespace {

// Least upper bound in the weak order, by brute force over S_n.
Permutation weak_join(const std::vector<Permutation>& all, const Permutation& a, const Permutation& b) {
    std::vector<Permutation> upper;
    for (const auto& p : all)
        if (weak_leq(a, p) && weak_leq(b, p)) upper.push_back(p);
    for (const auto& p : upper) {
        bool least = true;
        for (const auto& q : upper) least = least && weak_leq(p, q);
        if (least) return p;
    }
    throw std::logic_error("no join");
}

}  // namespace

TEST(Cliques, CountsOnFamilies) {
    const std::vector<std::size_t> oruga_counts{1, 2, 6, 24, 120};
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(maximal_cliques(RouteCatalog(oruga(n))).size(), oruga_counts[static_cast<std::size_t>(n - 1)]);
    const std::vector<std::size_t> caracol_counts{2, 5, 14};
    for (int n = 2; n <= 4; ++n)
        EXPECT_EQ(maximal_cliques(RouteCatalog(caracol(n))).size(), caracol_counts[static_cast<std::size_t>(n - 2)]);
}

TEST(Cliques, EverySizeMatchesTheFormula) {
    for (const auto& g : {oruga(4), caracol(4)}) {
        const RouteCatalog catalog(g);
        for (const auto& c : maximal_cliques(catalog)) {
            EXPECT_EQ(static_cast<int>(c.routes.size()), g.clique_size());
            EXPECT_TRUE(catalog.is_maximal_clique(c));
        }
    }
}

TEST(Cliques, FlipGraphReachesEveryClique) {
    const RouteCatalog catalog(caracol(4));
    const auto all = maximal_cliques(catalog);
    EXPECT_EQ(flip_graph_cliques(catalog, all.front()), all);
}

TEST(Cliques, RouteLimitIsEnforced) {
    EXPECT_THROW(RouteCatalog(oruga(6), 10), LimitError);
}

TEST(Lattice, Oruga2IsAChain) {
    const auto L = FramingLattice::build(oruga(2));
    ASSERT_EQ(L.size(), 2);
    const auto& catalog = L.catalog();
    EXPECT_EQ(L.element(L.bottom()), clique(catalog, "u1-u2, u1-d2, d1-d2"));
    EXPECT_EQ(L.element(L.top()), clique(catalog, "u1-u2, d1-u2, d1-d2"));
    ASSERT_EQ(L.covers().size(), 1u);
    EXPECT_EQ(format_route(L.graph(), L.covers()[0].label), "[1:u1|d1>·<u2|d2:1]");
    EXPECT_TRUE(L.leq(L.bottom(), L.top()));
    EXPECT_FALSE(L.leq(L.top(), L.bottom()));
}

TEST(Lattice, Oruga3IsAHexagon) {
    const auto L = FramingLattice::build(oruga(3));
    EXPECT_EQ(L.size(), 6);
    EXPECT_EQ(L.covers().size(), 6u);
    EXPECT_EQ(L.upper_covers(L.bottom()).size(), 2u);
    EXPECT_EQ(L.lower_covers(L.top()).size(), 2u);
    EXPECT_EQ(join_irreducibles(L).size(), 4u);
    EXPECT_EQ(meet_irreducibles(L).size(), 4u);
}

TEST(Lattice, AdjacencyDescribesTheExchange) {
    const RouteCatalog catalog(oruga(2));
    const auto bottom = clique(catalog, "u1-u2, u1-d2, d1-d2");
    const auto top = clique(catalog, "u1-u2, d1-u2, d1-d2");
    const auto adj = adjacent(catalog, bottom, top);
    ASSERT_TRUE(adj);
    EXPECT_EQ(catalog.route(adj->removed), route(catalog.graph(), "u1-d2"));
    EXPECT_EQ(catalog.route(adj->added), route(catalog.graph(), "d1-u2"));
    EXPECT_TRUE(adj->removed_is_clockwise);
    EXPECT_FALSE(adjacent(catalog, bottom, bottom));
    EXPECT_THROW(cover_label(catalog, top, bottom), std::invalid_argument);
}

TEST(Lattice, OrderJoinAndMeetMatchTheWeakOrder) {
    for (int n = 2; n <= 4; ++n) {
        const auto L = FramingLattice::build(oruga(n));
        const auto all = all_permutations(n);
        std::vector<Permutation> perm(static_cast<std::size_t>(L.size()));
        for (int x = 0; x < L.size(); ++x) perm[static_cast<std::size_t>(x)] = clique_to_perm(L.catalog(), L.element(x));
        for (int x = 0; x < L.size(); ++x) {
            for (int y = 0; y < L.size(); ++y) {
                const auto& px = perm[static_cast<std::size_t>(x)];
                const auto& py = perm[static_cast<std::size_t>(y)];
                ASSERT_EQ(L.leq(x, y), weak_leq(px, py)) << format_permutation(px) << " " << format_permutation(py);
                ASSERT_EQ(perm[static_cast<std::size_t>(L.join(x, y))], weak_join(all, px, py));
            }
        }
    }
}

TEST(Lattice, SemidistributiveBothWays) {
    for (const auto& g : {oruga(3), caracol(3), caracol(4)}) {
        const auto L = FramingLattice::build(g);
        EXPECT_TRUE(check_semidistributive(L));
        EXPECT_TRUE(semidistributive_by_triples(L));
    }
}

TEST(Lattice, CanonicalJoinRepresentationsUseCoverLabels) {
    const auto L = FramingLattice::build(caracol(3));
    int total = 0;
    for (int x = 0; x < L.size(); ++x) {
        const auto cjr = canonical_join_representation(L, x);
        EXPECT_EQ(cjr.size(), L.lower_covers(x).size());
        int joined = L.bottom();
        for (int j : cjr) {
            EXPECT_TRUE(is_join_irreducible(L, j));
            joined = L.join(joined, j);
        }
        EXPECT_EQ(joined, x);
        total += static_cast<int>(cjr.size());
    }
    EXPECT_EQ(total, static_cast<int>(L.covers().size()));
    // One join-irreducible per brick.
    EXPECT_EQ(join_irreducibles(L).size(), enumerate_bricks(L.graph()).size());
}

TEST(Lattice, DotOutputIsDeterministic) {
    const auto a = to_dot(FramingLattice::build(oruga(3)));
    const auto b = to_dot(FramingLattice::build(oruga(3)));
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("digraph"), std::string::npos);
}
