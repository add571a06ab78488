#ifndef LATFRAME_CORPUS_HPP
#define LATFRAME_CORPUS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latframe/graph.hpp"

namespace latframe {

struct RandomGraphParams {
    std::uint64_t seed = 0;
    int vertices = 5;   // at least 2
    int edges = 8;      // clamped to what the layout allows
};

/// Each vertex is its own layer; edges join a layer to the next one or the
/// one after, with at most two parallel edges per pair. Every vertex but the
/// first has an incoming edge, so no vertex is isolated. Framings are random.
/// Edge ids are e1, e2, ... in (tail, head) order.
FramedGraph random_framed_graph(const RandomGraphParams& params);

/// `oruga:N`, `caracol:N` or `random:SEED,V,E`. Throws std::invalid_argument.
FramedGraph builtin_graph(std::string_view spec);
bool is_builtin_spec(std::string_view text);

struct CorpusEntry {
    std::string name;
    FramedGraph graph;
};

/// The reference corpus: oruga(2..4), caracol(2..3) and `random_count`
/// seeded random graphs with 3 to 6 vertices, at most 10 edges, at least one
/// brick, and a route count within `route_cap`.
std::vector<CorpusEntry> reference_corpus(int random_count = 50, int route_cap = 512);

}  // namespace latframe

#endif  // LATFRAME_CORPUS_HPP
