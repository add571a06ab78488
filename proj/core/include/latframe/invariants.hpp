#ifndef LATFRAME_INVARIANTS_HPP
#define LATFRAME_INVARIANTS_HPP

// The full property suite for one framed graph. Every structural claim the
// library relies on is re-checked here against brute force, so a passing
// suite on a graph means the lattice, the reconstruction maps and the
// coordinates are mutually consistent on it.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latframe/graph.hpp"
#include "latframe/lattice.hpp"

namespace latframe {

enum class Property {
    structure,
    round_trips,
    greedy_oracles,
    cornering,
    cube_embedding,
    comparison,
    lattice_theory,
    duality,
};

std::string_view property_name(Property p);

struct CheckResult {
    Property property = Property::structure;
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample or error
};

/// Facts that are recorded rather than asserted.
struct Observations {
    int elements = 0;
    int covers = 0;
    int bricks = 0;
    /// Covers along which the single changing right coordinate goes up / down.
    int ccr_increasing = 0;
    int ccr_decreasing = 0;
    /// Some x, y whose meet has fewer left-clockwise bricks than x and y share.
    bool meet_intersection_witness = false;
    /// Sink edges d with psi_L(LT, d) equal to its dual version, over all LT.
    int sink_seeds_agreeing = 0;
    int sink_seeds_total = 0;
    std::vector<int> rowmotion_orbits;  // sorted orbit sizes
};

struct SuiteReport {
    std::string graph;
    std::vector<CheckResult> checks;
    Observations observed;

    bool passed() const;
    const CheckResult* first_failure() const;
};

struct SuiteOptions {
    std::size_t route_limit = kDefaultRouteLimit;
    /// Semidistributivity is also checked triple by triple up to this size.
    int triple_check_limit = 150;
};

/// Throws LimitError when the graph has too many routes; every other failure
/// is reported inside the result.
SuiteReport run_invariants(const FramedGraph& g, const SuiteOptions& options = {}, std::string name = {});

/// Semidistributivity straight from the definition, over all triples.
bool semidistributive_by_triples(const FramingLattice& L);

}  // namespace latframe

#endif  // LATFRAME_INVARIANTS_HPP
