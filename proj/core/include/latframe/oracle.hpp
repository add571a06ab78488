#ifndef LATFRAME_ORACLE_HPP
#define LATFRAME_ORACLE_HPP

// Brute-force characterizations of the greedy reconstruction steps. They
// enumerate every candidate and filter, so they are only meant for small
// graphs and for cross-checking.

#include <optional>

#include "latframe/coherence.hpp"
#include "latframe/graph.hpp"
#include "latframe/reconstruction.hpp"

namespace latframe {

/// The largest left-cornered route at `c` in the outgoing order at its apex
/// that is weakly coherent with every brick of T and, if T has a brick with
/// left corner c, strictly below that brick in the same order.
std::optional<GeneralizedRoute> phi_L_oracle(const FramedGraph& g, const BrickClique& T, const Corner& c);

/// The seed path of the second step: c↑ followed by the path of LT's route
/// at c, or the single sink edge.
std::vector<EdgeIndex> seed_path(const FramedGraph& g, const CorneredClique& LT, const ReconstructionSeed& seed);

/// The smallest route, in the incoming order at the start of the seed path,
/// that ends with the seed path and is coherent with every route of LT.
std::optional<GeneralizedRoute> psi_L_oracle(const FramedGraph& g, const CorneredClique& LT,
                                             const ReconstructionSeed& seed);

}  // namespace latframe

#endif  // LATFRAME_ORACLE_HPP
