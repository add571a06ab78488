#ifndef LATFRAME_RECONSTRUCTION_HPP
#define LATFRAME_RECONSTRUCTION_HPP

#include <variant>
#include <vector>

#include "latframe/coherence.hpp"
#include "latframe/graph.hpp"
#include "latframe/lattice.hpp"

namespace latframe {

/// A set of pairwise coherent bricks, kept sorted.
struct BrickClique {
    std::vector<GeneralizedRoute> bricks;

    friend bool operator==(const BrickClique&, const BrickClique&) = default;
    friend auto operator<=>(const BrickClique&, const BrickClique&) = default;
};

/// One cornered route per corner of `side`; `routes[k]` starts (left) or
/// ends (right) at corner k of the graph's canonical corner list.
struct CorneredClique {
    Side side = Side::incoming;
    std::vector<GeneralizedRoute> routes;

    friend bool operator==(const CorneredClique&, const CorneredClique&) = default;
};

/// Sorts and checks pairwise coherence; throws std::invalid_argument.
BrickClique make_brick_clique(const FramedGraph& g, std::vector<GeneralizedRoute> bricks);
bool is_brick_clique(const FramedGraph& g, const std::vector<GeneralizedRoute>& bricks);
/// One route per corner, each cornered at its own corner, pairwise coherent.
bool is_cornered_clique(const FramedGraph& g, const CorneredClique& clique);

/// Labels of the lower (resp. upper) covers of x.
BrickClique down_bricks(const FramingLattice& L, int x);
BrickClique up_bricks(const FramingLattice& L, int x);

/// First reconstruction step: grow a left-cornered route from corner `c`,
/// always taking the largest admissible outgoing edge.
GeneralizedRoute phi_L(const FramedGraph& g, const BrickClique& T, const Corner& c);
CorneredClique phi_L_all(const FramedGraph& g, const BrickClique& T);

/// A left corner or a sink edge.
using ReconstructionSeed = std::variant<Corner, EdgeIndex>;
/// Left corners in canonical order, then sink edges in declaration order.
std::vector<ReconstructionSeed> left_seeds(const FramedGraph& g);

/// Second reconstruction step: extend the seed path to the left, always
/// taking the smallest admissible incoming edge.
GeneralizedRoute psi_L(const FramedGraph& g, const CorneredClique& LT, const ReconstructionSeed& seed);
/// One route per seed. Throws InvariantError on duplicates or incoherence.
std::vector<GeneralizedRoute> psi_L_routes(const FramedGraph& g, const CorneredClique& LT);
MaximalClique psi_L_all(const RouteCatalog& catalog, const CorneredClique& LT);

/// psi_L_all(phi_L_all(T)): the clique whose lower covers are labeled by T.
MaximalClique reconstruct(const RouteCatalog& catalog, const BrickClique& T);

/// Left-cornered route of each corner, cut from the cornering routes.
CorneredClique sigma_L(const FramedGraph& g, std::span<const GeneralizedRoute> clique);
CorneredClique sigma_L(const RouteCatalog& catalog, const MaximalClique& clique);

// Up-down dual: the same algorithms on reflect_ud(g).

/// The clique whose upper covers are labeled by T.
MaximalClique up_reconstruct(const RouteCatalog& catalog, const BrickClique& T);
/// psi_L computed on the up-down reflection, mapped back to g.
GeneralizedRoute psi_L_dual(const FramedGraph& g, const CorneredClique& LT, const ReconstructionSeed& seed);
MaximalClique psi_L_dual_all(const RouteCatalog& catalog, const CorneredClique& LT);

// Right versions: the left algorithms on reflect_lr(g), transported back.

GeneralizedRoute phi_R(const FramedGraph& g, const BrickClique& T, const Corner& right_corner);
CorneredClique phi_R_all(const FramedGraph& g, const BrickClique& T);
/// `seed` is a right corner or a source edge.
GeneralizedRoute psi_R(const FramedGraph& g, const CorneredClique& RT, const ReconstructionSeed& seed);
MaximalClique psi_R_all(const RouteCatalog& catalog, const CorneredClique& RT);
CorneredClique sigma_R(const RouteCatalog& catalog, const MaximalClique& clique);

/// reconstruct(up_bricks(x)); a permutation of the elements.
int rowmotion(const FramingLattice& L, int x);

/// Pairwise coherent brick sets with at most `max_size` bricks (negative for
/// no bound), by size and then lexicographically. Includes the empty set.
std::vector<BrickClique> brick_complex_faces(const FramedGraph& g, int max_size = -1);

// Transport of generalized routes through the reflections. `to` must be the
// matching reflection of `from`.
Corner transport_ud(const FramedGraph& to, const Corner& c);
GeneralizedRoute transport_ud(const FramedGraph& to, const GeneralizedRoute& s);
Corner transport_lr(const FramedGraph& from, const FramedGraph& to, const Corner& c);
GeneralizedRoute transport_lr(const FramedGraph& from, const FramedGraph& to, const GeneralizedRoute& s);

}  // namespace latframe

#endif  // LATFRAME_RECONSTRUCTION_HPP
