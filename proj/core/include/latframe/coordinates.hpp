#ifndef LATFRAME_COORDINATES_HPP
#define LATFRAME_COORDINATES_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "latframe/coherence.hpp"
#include "latframe/lattice.hpp"

namespace latframe {

/// One entry per corner, in the graph's canonical corner order.
struct CubicalCoordinates {
    std::vector<int> values;

    friend bool operator==(const CubicalCoordinates&, const CubicalCoordinates&) = default;
    friend auto operator<=>(const CubicalCoordinates&, const CubicalCoordinates&) = default;
};

bool componentwise_leq(const CubicalCoordinates& a, const CubicalCoordinates& b);

struct CorneringRoutes {
    GeneralizedRoute lower;  // largest clique route entering through the corner's smaller edge
    GeneralizedRoute upper;  // smallest clique route entering through the larger edge
};

/// Routes of a clique through a vertex are totally ordered by the incoming
/// preorder, ties broken by the outgoing preorder.
std::strong_ordering clique_order(const FramedGraph& g, Vertex v, const GeneralizedRoute& a, const GeneralizedRoute& b);

/// Throws InvariantError if the two routes do not share their suffix after
/// the corner or are not consecutive in the clique order.
CorneringRoutes cornering_routes(const FramedGraph& g, std::span<const GeneralizedRoute> clique, const Corner& c);

/// Left-cornered routes of each corner sorted from largest to smallest in
/// the outgoing order at the apex, so a route's index is its corank.
class CornerRanks {
public:
    explicit CornerRanks(const FramedGraph& g);
    int corner_count() const { return static_cast<int>(by_corner_.size()); }
    /// Number of left-cornered routes at corner k.
    int route_count(int corner) const { return static_cast<int>(by_corner_[static_cast<std::size_t>(corner)].size()); }
    const std::vector<GeneralizedRoute>& routes(int corner) const { return by_corner_[static_cast<std::size_t>(corner)]; }
    int corank(int corner, const GeneralizedRoute& s) const;

private:
    std::vector<std::vector<GeneralizedRoute>> by_corner_;
    std::vector<std::map<std::vector<EdgeIndex>, int>> rank_;
};

CubicalCoordinates ccl(const FramedGraph& g, std::span<const GeneralizedRoute> clique);
CubicalCoordinates ccl(const FramedGraph& g, const CornerRanks& ranks, std::span<const GeneralizedRoute> clique);
CubicalCoordinates ccl(const RouteCatalog& catalog, const MaximalClique& clique);
/// Left coordinates of the mirrored clique on reflect_lr(g), one entry per
/// right corner of g in g's canonical order.
CubicalCoordinates ccr(const FramedGraph& g, std::span<const GeneralizedRoute> clique);
CubicalCoordinates ccr(const RouteCatalog& catalog, const MaximalClique& clique);

/// Coordinates of every element, indexed like the lattice.
std::vector<CubicalCoordinates> all_ccl(const FramingLattice& L);
std::vector<CubicalCoordinates> all_ccr(const FramingLattice& L);

/// Bricks with left corner `c` that are clockwise, at the corner apex, to
/// some route of the clique.
std::vector<GeneralizedRoute> left_clockwise_at(const FramedGraph& g, std::span<const GeneralizedRoute> clique,
                                                const Corner& c);
std::vector<GeneralizedRoute> left_clockwise_bricks(const FramedGraph& g, std::span<const GeneralizedRoute> clique);

bool leq_by_coordinates(const RouteCatalog& catalog, const MaximalClique& a, const MaximalClique& b);

/// A route `added` of the second clique clockwise at `vertex` to a route
/// `removed` of the first one. Route fields are catalog indices.
struct ClockwiseWitness {
    int route = 0;        // in the first clique
    int other_route = 0;  // in the second clique, clockwise to `route`
    Vertex vertex = 0;
};

/// nullopt iff a <= b; otherwise the witness with the smallest vertex.
std::optional<ClockwiseWitness> not_leq_witness(const RouteCatalog& catalog, const MaximalClique& a,
                                                const MaximalClique& b);

}  // namespace latframe

#endif  // LATFRAME_COORDINATES_HPP
