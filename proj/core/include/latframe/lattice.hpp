#ifndef LATFRAME_LATTICE_HPP
#define LATFRAME_LATTICE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latframe/coherence.hpp"
#include "latframe/graph.hpp"

namespace latframe {

inline constexpr std::size_t kDefaultRouteLimit = 4096;

/// Too many routes to enumerate cliques at desk scale.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural property that must hold failed; always an implementation bug
/// or a counterexample worth reporting.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Bitset = boost::dynamic_bitset<>;

/// Sorted indices into the route catalog.
struct MaximalClique {
    std::vector<int> routes;

    friend bool operator==(const MaximalClique&, const MaximalClique&) = default;
    friend auto operator<=>(const MaximalClique&, const MaximalClique&) = default;
};

/// All routes of a framed graph together with their coherence relation.
class RouteCatalog {
public:
    explicit RouteCatalog(FramedGraph g, std::size_t route_limit = kDefaultRouteLimit);

    const FramedGraph& graph() const { return graph_; }
    const std::vector<GeneralizedRoute>& routes() const { return routes_; }
    const GeneralizedRoute& route(int i) const { return routes_.at(static_cast<std::size_t>(i)); }
    int size() const { return static_cast<int>(routes_.size()); }

    std::optional<int> find(const std::vector<EdgeIndex>& edges) const;
    std::optional<int> find(const GeneralizedRoute& r) const { return find(r.edges); }
    /// Throws std::invalid_argument on a route that is not in the catalog.
    int index_of(const std::vector<EdgeIndex>& edges) const;

    bool coherent(int a, int b) const { return coherent_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    /// Routes coherent with `a`, including `a` itself.
    const Bitset& coherent_with(int a) const { return coherent_[static_cast<std::size_t>(a)]; }

    MaximalClique clique_of(std::span<const GeneralizedRoute> routes) const;
    std::vector<GeneralizedRoute> routes_of(const MaximalClique& c) const;
    /// Pairwise coherent and of the size every maximal clique has.
    bool is_maximal_clique(const MaximalClique& c) const;

private:
    FramedGraph graph_;
    std::vector<GeneralizedRoute> routes_;
    std::map<std::vector<EdgeIndex>, int> by_edges_;
    std::vector<Bitset> coherent_;
};

/// Pivoting Bron-Kerbosch over the coherence graph. Sorted. Throws
/// InvariantError if a clique violates the size formula.
std::vector<MaximalClique> maximal_cliques(const RouteCatalog& catalog);

/// All cliques reachable from `start` by exchanging one route at a time.
std::vector<MaximalClique> flip_graph_cliques(const RouteCatalog& catalog, const MaximalClique& start);

/// Two cliques sharing all but one route.
struct Adjacency {
    int removed = 0;  // the route of a \ b
    int added = 0;    // the route of b \ a
    ConflictSubroute conflict;
    bool removed_is_clockwise = false;  // true when b lies above a
};

/// Returns nullopt unless the cliques differ in exactly one route. Checks that
/// the exchanged routes have one conflict subroute and that both
/// recombinations through it lie in the common part.
std::optional<Adjacency> adjacent(const RouteCatalog& catalog, const MaximalClique& a, const MaximalClique& b);

/// The brick labeling the cover `lower` < `upper`. Throws
/// std::invalid_argument if the pair is not a cover in that direction.
GeneralizedRoute cover_label(const RouteCatalog& catalog, const MaximalClique& lower, const MaximalClique& upper);

struct CoverEdge {
    int lower = 0;
    int upper = 0;
    GeneralizedRoute label;
};

struct LatticeOptions {
    std::size_t route_limit = kDefaultRouteLimit;
    /// Join and meet tables are cached up to this many elements.
    int table_limit = 1500;
    /// Check existence of all joins and meets while building.
    bool verify_lattice = true;
};

class FramingLattice {
public:
    static FramingLattice build(const FramedGraph& g, const LatticeOptions& options = {});

    const RouteCatalog& catalog() const { return catalog_; }
    const FramedGraph& graph() const { return catalog_.graph(); }

    int size() const { return static_cast<int>(elements_.size()); }
    std::span<const MaximalClique> elements() const { return elements_; }
    const MaximalClique& element(int x) const { return elements_.at(static_cast<std::size_t>(x)); }
    std::optional<int> find(const MaximalClique& c) const;
    /// Throws std::invalid_argument when `c` is not an element.
    int index_of(const MaximalClique& c) const;

    std::span<const CoverEdge> covers() const { return covers_; }
    /// Indices into covers().
    const std::vector<int>& lower_covers(int x) const { return lower_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& upper_covers(int x) const { return upper_[static_cast<std::size_t>(x)]; }

    int bottom() const { return bottom_; }
    int top() const { return top_; }

    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    const Bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
    const Bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }
    /// Throws InvariantError if the least upper bound is not unique.
    int join(int a, int b) const;
    int meet(int a, int b) const;

    /// Elements in an order compatible with the lattice order.
    const std::vector<int>& linear_extension() const { return topo_; }

private:
    explicit FramingLattice(RouteCatalog catalog) : catalog_(std::move(catalog)) {}
    int compute_join(int a, int b) const;
    int compute_meet(int a, int b) const;

    RouteCatalog catalog_;
    std::vector<MaximalClique> elements_;
    std::map<MaximalClique, int> index_;
    std::vector<CoverEdge> covers_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::vector<int>> upper_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::size_t> up_count_;
    std::vector<std::size_t> down_count_;
    std::vector<int> topo_;
    std::vector<int> join_table_;
    std::vector<int> meet_table_;
    int bottom_ = 0;
    int top_ = 0;
};

/// Checks both semidistributive laws. For each x the elements y sharing a
/// value of x v y must be closed under meets (and dually); this is the
/// triple-wise definition grouped by the common value.
bool check_semidistributive(const FramingLattice& L);
bool is_join_irreducible(const FramingLattice& L, int x);
bool is_meet_irreducible(const FramingLattice& L, int x);
std::vector<int> join_irreducibles(const FramingLattice& L);
std::vector<int> meet_irreducibles(const FramingLattice& L);

/// The unique minimal j with join(j, lower) = upper for a cover.
int cover_join_label(const FramingLattice& L, const CoverEdge& cover);
/// The unique maximal m with meet(m, upper) = lower for a cover.
int cover_meet_label(const FramingLattice& L, const CoverEdge& cover);
/// Labels of the lower covers of x, sorted.
std::vector<int> canonical_join_representation(const FramingLattice& L, int x);
std::vector<int> canonical_meet_representation(const FramingLattice& L, int x);

/// Graphviz rendering of the Hasse diagram. `coordinates`, when non-empty,
/// holds one vector per element and is appended to the node labels.
std::string to_dot(const FramingLattice& L, std::span<const std::vector<int>> coordinates = {});

}  // namespace latframe

#endif  // LATFRAME_LATTICE_HPP
