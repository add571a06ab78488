#include "latframe/oracle.hpp"

#include <algorithm>

namespace latframe {

std::optional<GeneralizedRoute> phi_L_oracle(const FramedGraph& g, const BrickClique& T, const Corner& c) {
    const Vertex v = c.apex;
    const GeneralizedRoute* own = nullptr;
    for (const auto& t : T.bricks)
        if (t.left == c) own = &t;

    std::optional<GeneralizedRoute> best;
    for (auto& s : enumerate_left_cornered_routes(g)) {
        if (s.left != c) continue;
        if (own && cmp_preorder(g, v, Side::outgoing, s, *own) >= 0) continue;
        const bool compatible = std::all_of(T.bricks.begin(), T.bricks.end(),
                                            [&](const GeneralizedRoute& t) { return weakly_coherent(g, s, t); });
        if (!compatible) continue;
        if (!best || cmp_preorder(g, v, Side::outgoing, s, *best) > 0) best = std::move(s);
    }
    return best;
}

std::vector<EdgeIndex> seed_path(const FramedGraph& g, const CorneredClique& LT, const ReconstructionSeed& seed) {
    if (const auto* c = std::get_if<Corner>(&seed)) {
        const auto k = g.corner_index(*c);
        if (!k || !c->is_left()) throw std::invalid_argument("seed is not a left corner");
        std::vector<EdgeIndex> out{c->upper};
        const auto& tail = LT.routes.at(static_cast<std::size_t>(*k)).edges;
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    return {std::get<EdgeIndex>(seed)};
}

std::optional<GeneralizedRoute> psi_L_oracle(const FramedGraph& g, const CorneredClique& LT,
                                             const ReconstructionSeed& seed) {
    const auto p0 = seed_path(g, LT, seed);
    const Vertex v = g.edge(p0.front()).tail;
    std::optional<GeneralizedRoute> best;
    for (auto& r : enumerate_routes(g)) {
        if (r.edges.size() < p0.size() || !std::equal(p0.rbegin(), p0.rend(), r.edges.rbegin())) continue;
        const bool compatible = std::all_of(LT.routes.begin(), LT.routes.end(),
                                            [&](const GeneralizedRoute& t) { return coherent(g, r, t); });
        if (!compatible) continue;
        if (!best || cmp_preorder(g, v, Side::incoming, r, *best) < 0) best = std::move(r);
    }
    return best;
}

}  // namespace latframe
