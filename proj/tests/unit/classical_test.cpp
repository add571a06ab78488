#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "latframe/classical.hpp"
#include "latframe/coordinates.hpp"
#include "latframe/reconstruction.hpp"
#include "test_support.hpp"

using namespace latframe;
using latframe::testing::clique;

TEST(Permutations, InversionsAreValuePairs) {
    EXPECT_EQ(inversions({2, 1, 3}), (std::vector<std::pair<int, int>>{{1, 2}}));
    EXPECT_EQ(inversions({2, 3, 1}), (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}));
    EXPECT_TRUE(inversions({1, 2, 3}).empty());
    EXPECT_EQ(all_permutations(4).size(), 24u);
    EXPECT_FALSE(is_permutation({1, 1, 3}));
    EXPECT_EQ(format_permutation({3, 1, 2}), "312");
}

TEST(Permutations, WeakOrderCovers) {
    EXPECT_TRUE(weak_covers({1, 2, 3}, {2, 1, 3}));
    EXPECT_FALSE(weak_covers({2, 1, 3}, {1, 2, 3}));
    EXPECT_FALSE(weak_covers({1, 2, 3}, {3, 2, 1}));
    EXPECT_TRUE(weak_leq({1, 2, 3}, {3, 2, 1}));
    EXPECT_FALSE(weak_leq({2, 1, 3}, {1, 3, 2}));
}

TEST(OrugaModel, WordsOfOruga2) {
    const RouteCatalog catalog(oruga(2));
    EXPECT_EQ(perm_to_clique(catalog, {1, 2}), clique(catalog, "d1-d2, u1-d2, u1-u2"));
    EXPECT_EQ(perm_to_clique(catalog, {2, 1}), clique(catalog, "d1-d2, d1-u2, u1-u2"));
    EXPECT_EQ(word_route(catalog.graph(), {1, 0}), latframe::testing::route(catalog.graph(), "u1-d2"));
}

TEST(OrugaModel, PermutationsAreAnOrderIsomorphism) {
    for (int n = 1; n <= 4; ++n) {
        const auto L = FramingLattice::build(oruga(n));
        const auto perms = all_permutations(n);
        ASSERT_EQ(static_cast<std::size_t>(L.size()), perms.size());
        for (const auto& p : perms) EXPECT_EQ(clique_to_perm(L.catalog(), perm_to_clique(L.catalog(), p)), p);
        for (const auto& a : perms)
            for (const auto& b : perms) {
                const int x = L.index_of(perm_to_clique(L.catalog(), a));
                const int y = L.index_of(perm_to_clique(L.catalog(), b));
                ASSERT_EQ(L.leq(x, y), weak_leq(a, b));
            }
    }
}

TEST(OrugaModel, CoordinateFormula) {
    EXPECT_EQ(ccl_weak_formula({3, 2, 1}, 1), 3);
    EXPECT_EQ(ccl_weak_formula({3, 2, 1}, 2), 1);
    EXPECT_EQ(ccl_weak_formula({2, 1, 3}, 1), 2);
    EXPECT_EQ(ccl_weak_formula({2, 1, 3}, 2), 0);
    for (int n = 2; n <= 5; ++n) {
        const RouteCatalog catalog(oruga(n));
        for (const auto& p : all_permutations(n)) {
            const auto coords = ccl(catalog, perm_to_clique(catalog, p));
            for (int i = 1; i < n; ++i)
                ASSERT_EQ(coords.values[static_cast<std::size_t>(i - 1)], ccl_weak_formula(p, i))
                    << format_permutation(p) << " corner " << i;
        }
    }
}

// The cornered route at corner i takes the up edge into j exactly when (i, j)
// is an inversion, which is where the powers of two in the formula come from.
TEST(OrugaModel, CorneredRoutesSpellInversions) {
    for (int n = 2; n <= 5; ++n) {
        const RouteCatalog catalog(oruga(n));
        const auto& g = catalog.graph();
        for (const auto& p : all_permutations(n)) {
            const auto inv = inversions(p);
            const std::set<std::pair<int, int>> inv_set(inv.begin(), inv.end());
            const auto cornered = sigma_L(catalog, perm_to_clique(catalog, p));
            for (int i = 1; i < n; ++i) {
                const auto& s = cornered.routes[static_cast<std::size_t>(i - 1)];
                ASSERT_EQ(s.edges.size(), static_cast<std::size_t>(n - i));
                for (auto e : s.edges) {
                    const int j = g.external_label(g.edge(e).head);
                    EXPECT_EQ(g.edge(e).id[0] == 'u', inv_set.count({i, j}) == 1)
                        << format_permutation(p) << " corner " << i << " into " << j;
                }
            }
        }
    }
}

TEST(Arcs, MatchBricks) {
    const auto g2 = oruga(2);
    ASSERT_EQ(all_arcs(2).size(), 1u);
    EXPECT_EQ(arc_to_brick(g2, all_arcs(2)[0]), enumerate_bricks(g2)[0]);
    EXPECT_EQ(format_arc(all_arcs(2)[0]), "(1,2)");
    for (int n = 2; n <= 5; ++n) {
        const auto g = oruga(n);
        const auto arcs = all_arcs(n);
        EXPECT_EQ(arcs.size(), enumerate_bricks(g).size());
        std::set<GeneralizedRoute> images;
        for (const auto& a : arcs) {
            const auto b = arc_to_brick(g, a);
            EXPECT_EQ(brick_to_arc(g, b), a);
            images.insert(b);
        }
        EXPECT_EQ(images.size(), arcs.size());
    }
}

TEST(Arcs, NoncrossingDiagramsAreBrickCliques) {
    for (int n = 2; n <= 4; ++n) {
        const auto g = oruga(n);
        const auto arcs = all_arcs(n);
        for (const auto& a : arcs)
            for (const auto& b : arcs)
                if (a != b) EXPECT_EQ(arcs_compatible(a, b), coherent(g, arc_to_brick(g, a), arc_to_brick(g, b)));
        int factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        EXPECT_EQ(static_cast<int>(brick_complex_faces(g).size()), factorial);
    }
}

TEST(Lehmer, CoversChangeOneEntry) {
    EXPECT_EQ(lehmer_code({3, 2, 1}), (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(lehmer_code({2, 1, 3}), (std::vector<int>{1, 0, 0}));
    for (int n = 2; n <= 5; ++n) EXPECT_TRUE(lehmer_covers_change_one_entry(n));
}

TEST(Lehmer, CodesDoNotDetermineTheOrder) {
    for (int n : {3, 4}) {
        const auto witness = lehmer_counterexample(n);
        ASSERT_TRUE(witness);
        const auto& [a, b] = *witness;
        const auto la = lehmer_code(a), lb = lehmer_code(b);
        EXPECT_TRUE(std::equal(la.begin(), la.end(), lb.begin(), [](int x, int y) { return x <= y; }));
        EXPECT_FALSE(weak_leq(a, b));
        EXPECT_FALSE(weak_leq(b, a));
    }
    EXPECT_FALSE(lehmer_counterexample(2));
}

TEST(Tamari, TreesAndBracketVectors) {
    EXPECT_EQ(all_binary_trees(3).size(), 5u);
    EXPECT_EQ(all_binary_trees(4).size(), 14u);
    for (const auto& t : all_binary_trees(4)) EXPECT_EQ(bracket_vector(t).size(), 3u);
    // A left comb rotates up to the right comb.
    std::size_t covers = 0;
    for (const auto& t : all_binary_trees(3)) covers += right_rotations(t).size();
    EXPECT_EQ(covers, 5u);
}

TEST(Tamari, CaracolMatchesTheTamariLattice) {
    for (int n = 2; n <= 4; ++n) {
        const auto report = tamari_check(n);
        EXPECT_TRUE(report.passed()) << report.failure;
        EXPECT_EQ(report.elements, report.catalan);
        std::vector<int> identity(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i) identity[static_cast<std::size_t>(i)] = i;
        EXPECT_EQ(report.corner_for_entry, identity);
    }
}
