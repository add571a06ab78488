#ifndef LATFRAME_CLASSICAL_HPP
#define LATFRAME_CLASSICAL_HPP

// Classical objects hidden in two graph families: permutations, inversions
// and noncrossing arcs on oruga(n); binary trees and bracket vectors on
// caracol(n). The permutation and tree models are implemented from scratch so
// they can act as independent oracles for the lattice machinery.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latframe/coherence.hpp"
#include "latframe/lattice.hpp"

namespace latframe {

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
bool is_permutation(const Permutation& p);
std::string format_permutation(const Permutation& p);

/// Pairs of values (i, j), i < j, with j written before i.
std::vector<std::pair<int, int>> inversions(const Permutation& p);
/// Weak order: inclusion of inversion sets.
bool weak_leq(const Permutation& a, const Permutation& b);
/// b is obtained from a by swapping an ascent at adjacent positions.
bool weak_covers(const Permutation& a, const Permutation& b);

/// The route of oruga(n) spelling a 0/1 word, 1 being the up edge.
GeneralizedRoute word_route(const FramedGraph& oruga_graph, const std::vector<int>& word);
/// Words p0..pn where pk has ones at the positions of the first k values.
MaximalClique perm_to_clique(const RouteCatalog& oruga_catalog, const Permutation& p);
/// Throws InvariantError if the clique is not of that form.
Permutation clique_to_perm(const RouteCatalog& oruga_catalog, const MaximalClique& clique);

struct Arc {
    int start = 0;
    int end = 0;
    std::vector<bool> above;  // one entry per point strictly between the ends

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::vector<Arc> all_arcs(int n);
/// Left corner at i, right corner at j-1, up edge into k iff the arc passes above k.
GeneralizedRoute arc_to_brick(const FramedGraph& oruga_graph, const Arc& arc);
Arc brick_to_arc(const FramedGraph& oruga_graph, const GeneralizedRoute& brick);
/// Neither crossing nor sharing a start or an end point.
bool arcs_compatible(const Arc& a, const Arc& b);
std::string format_arc(const Arc& arc);

/// Sum of 2^(n-j) over inversions (i, j).
int ccl_weak_formula(const Permutation& p, int i);
/// Entry i counts the inversions (i, j): the coordinate formula with every
/// weight replaced by 1.
std::vector<int> lehmer_code(const Permutation& p);
/// Two permutations with componentwise comparable Lehmer codes that are
/// incomparable in the weak order; nullopt if none exists in S_n.
std::optional<std::pair<Permutation, Permutation>> lehmer_counterexample(int n);
/// Along each weak-order cover the Lehmer code raises exactly one entry.
bool lehmer_covers_change_one_entry(int n);

/// A binary tree on in-order labels 1..n; 0 marks a missing child.
struct BinaryTree {
    int root = 0;
    std::vector<int> left;   // indexed by label, entry 0 unused
    std::vector<int> right;

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
    friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;
};

std::vector<BinaryTree> all_binary_trees(int n);
/// Trees obtained by one right rotation (an upward Tamari cover).
std::vector<BinaryTree> right_rotations(const BinaryTree& t);
/// Right subtree sizes of nodes 1..n-1 (the last one is always zero).
std::vector<int> bracket_vector(const BinaryTree& t);

struct TamariReport {
    int elements = 0;
    int catalan = 0;
    bool coordinates_distinct = false;
    bool covers_change_one_coordinate = false;
    bool coordinate_order_matches = false;
    bool vector_sets_equal = false;
    bool hasse_isomorphic = false;
    /// corner_for_entry[i] = corner index matched with bracket entry i.
    std::vector<int> corner_for_entry;
    std::string failure;

    bool passed() const {
        return elements == catalan && coordinates_distinct && covers_change_one_coordinate && coordinate_order_matches && vector_sets_equal &&
               hasse_isomorphic;
    }
};

TamariReport tamari_check(int n);

}  // namespace latframe

#endif  // LATFRAME_CLASSICAL_HPP
