#include "latframe/coordinates.hpp"

#include <algorithm>

#include "latframe/reconstruction.hpp"

namespace latframe {

bool componentwise_leq(const CubicalCoordinates& a, const CubicalCoordinates& b) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("coordinate vectors of different length");
    for (std::size_t k = 0; k < a.values.size(); ++k)
        if (a.values[k] > b.values[k]) return false;
    return true;
}

std::strong_ordering clique_order(const FramedGraph& g, Vertex v, const GeneralizedRoute& a, const GeneralizedRoute& b) {
    const auto in = cmp_preorder(g, v, Side::incoming, a, b);
    if (in != 0) return in;
    return cmp_preorder(g, v, Side::outgoing, a, b);
}

CorneringRoutes cornering_routes(const FramedGraph& g, std::span<const GeneralizedRoute> clique, const Corner& c) {
    if (!c.is_left()) throw std::invalid_argument("cornering routes are defined at left corners");
    const Vertex v = c.apex;
    std::vector<const GeneralizedRoute*> through;
    for (const auto& r : clique)
        if (passes_through(g, r, v)) through.push_back(&r);
    std::sort(through.begin(), through.end(),
              [&](const GeneralizedRoute* a, const GeneralizedRoute* b) { return clique_order(g, v, *a, *b) < 0; });

    const auto enters_by = [&](const GeneralizedRoute* r, EdgeIndex e) {
        const auto letter = letter_at(g, *r, v, Side::incoming);
        return letter && std::holds_alternative<EdgeIndex>(*letter) && std::get<EdgeIndex>(*letter) == e;
    };
    std::optional<std::size_t> lower, upper;
    for (std::size_t k = 0; k < through.size(); ++k) {
        if (enters_by(through[k], c.lower)) lower = k;               // keeps the largest
        if (enters_by(through[k], c.upper) && !upper) upper = k;     // keeps the smallest
    }
    const std::string where = format_corner(g, c);
    if (!lower || !upper) throw InvariantError("clique has no route through one edge of corner " + where);
    if (*upper != *lower + 1)
        throw InvariantError("cornering routes at " + where + " are not consecutive in the clique order");

    CorneringRoutes out{*through[*lower], *through[*upper]};
    const auto suffix = [&](const GeneralizedRoute& r) {
        const auto verts = path_vertices(g, r);
        const auto at = std::find(verts.begin(), verts.end(), v) - verts.begin();
        return std::vector<EdgeIndex>(r.edges.begin() + at, r.edges.end());
    };
    if (suffix(out.lower) != suffix(out.upper))
        throw InvariantError("cornering routes at " + where + " do not coincide after the corner");
    return out;
}

CornerRanks::CornerRanks(const FramedGraph& g) {
    const auto corners = g.left_corners();
    by_corner_.resize(corners.size());
    rank_.resize(corners.size());
    for (auto& s : enumerate_left_cornered_routes(g))
        by_corner_[static_cast<std::size_t>(*g.corner_index(*s.left))].push_back(std::move(s));
    for (std::size_t k = 0; k < corners.size(); ++k) {
        auto& list = by_corner_[k];
        const Vertex apex = corners[k].apex;
        std::sort(list.begin(), list.end(), [&](const GeneralizedRoute& a, const GeneralizedRoute& b) {
            return cmp_preorder(g, apex, Side::outgoing, a, b) > 0;
        });
        for (std::size_t r = 0; r < list.size(); ++r) rank_[k].emplace(list[r].edges, static_cast<int>(r));
    }
}

int CornerRanks::corank(int corner, const GeneralizedRoute& s) const {
    const auto& ranks = rank_.at(static_cast<std::size_t>(corner));
    auto it = ranks.find(s.edges);
    if (it == ranks.end()) throw std::invalid_argument("not a left-cornered route of that corner");
    return it->second;
}

CubicalCoordinates ccl(const FramedGraph& g, const CornerRanks& ranks, std::span<const GeneralizedRoute> clique) {
    const auto cornered = sigma_L(g, clique);
    CubicalCoordinates out;
    for (std::size_t k = 0; k < cornered.routes.size(); ++k)
        out.values.push_back(ranks.corank(static_cast<int>(k), cornered.routes[k]));
    return out;
}

CubicalCoordinates ccl(const FramedGraph& g, std::span<const GeneralizedRoute> clique) {
    return ccl(g, CornerRanks(g), clique);
}

CubicalCoordinates ccl(const RouteCatalog& catalog, const MaximalClique& clique) {
    const auto routes = catalog.routes_of(clique);
    return ccl(catalog.graph(), routes);
}

namespace {

// Position in the mirror's left-corner list of each right corner of g.
std::vector<std::size_t> mirrored_corner_positions(const FramedGraph& g, const FramedGraph& mirror) {
    std::vector<std::size_t> out;
    for (const auto& c : g.right_corners())
        out.push_back(static_cast<std::size_t>(*mirror.corner_index(transport_lr(g, mirror, c))));
    return out;
}

CubicalCoordinates reorder(const CubicalCoordinates& mirrored, const std::vector<std::size_t>& positions) {
    CubicalCoordinates out;
    for (auto p : positions) out.values.push_back(mirrored.values[p]);
    return out;
}

}  // namespace

CubicalCoordinates ccr(const FramedGraph& g, std::span<const GeneralizedRoute> clique) {
    const FramedGraph mirror = reflect_lr(g);
    std::vector<GeneralizedRoute> moved;
    for (const auto& r : clique) moved.push_back(transport_lr(g, mirror, r));
    return reorder(ccl(mirror, moved), mirrored_corner_positions(g, mirror));
}

CubicalCoordinates ccr(const RouteCatalog& catalog, const MaximalClique& clique) {
    const auto routes = catalog.routes_of(clique);
    return ccr(catalog.graph(), routes);
}

std::vector<CubicalCoordinates> all_ccl(const FramingLattice& L) {
    const CornerRanks ranks(L.graph());
    std::vector<CubicalCoordinates> out;
    out.reserve(static_cast<std::size_t>(L.size()));
    for (const auto& element : L.elements()) {
        const auto routes = L.catalog().routes_of(element);
        out.push_back(ccl(L.graph(), ranks, routes));
    }
    return out;
}

std::vector<CubicalCoordinates> all_ccr(const FramingLattice& L) {
    const FramedGraph mirror = reflect_lr(L.graph());
    const CornerRanks ranks(mirror);
    const auto positions = mirrored_corner_positions(L.graph(), mirror);
    std::vector<CubicalCoordinates> out;
    out.reserve(static_cast<std::size_t>(L.size()));
    for (const auto& element : L.elements()) {
        std::vector<GeneralizedRoute> moved;
        for (auto r : element.routes) moved.push_back(transport_lr(L.graph(), mirror, L.catalog().route(r)));
        out.push_back(reorder(ccl(mirror, ranks, moved), positions));
    }
    return out;
}

std::vector<GeneralizedRoute> left_clockwise_at(const FramedGraph& g, std::span<const GeneralizedRoute> clique,
                                                const Corner& c) {
    std::vector<GeneralizedRoute> out;
    for (const auto& brick : enumerate_bricks(g)) {
        if (*brick.left != c) continue;
        for (const auto& p : clique) {
            if (passes_through(g, p, c.apex) && is_clockwise_at(g, brick, p, c.apex)) {
                out.push_back(brick);
                break;
            }
        }
    }
    return out;
}

std::vector<GeneralizedRoute> left_clockwise_bricks(const FramedGraph& g, std::span<const GeneralizedRoute> clique) {
    std::vector<GeneralizedRoute> out;
    for (const auto& brick : enumerate_bricks(g)) {
        const Vertex v = brick.left->apex;
        for (const auto& p : clique) {
            if (passes_through(g, p, v) && is_clockwise_at(g, brick, p, v)) {
                out.push_back(brick);
                break;
            }
        }
    }
    return out;
}

bool leq_by_coordinates(const RouteCatalog& catalog, const MaximalClique& a, const MaximalClique& b) {
    return componentwise_leq(ccl(catalog, a), ccl(catalog, b));
}

std::optional<ClockwiseWitness> not_leq_witness(const RouteCatalog& catalog, const MaximalClique& a,
                                                const MaximalClique& b) {
    const auto& g = catalog.graph();
    std::optional<ClockwiseWitness> best;
    for (auto r : a.routes) {
        const auto& route = catalog.route(r);
        for (auto rp : b.routes) {
            const auto& other = catalog.route(rp);
            for (Vertex v : path_vertices(g, route)) {
                if (best && v >= best->vertex) break;
                if (!g.is_internal(v) || !passes_through(g, other, v)) continue;
                if (is_clockwise_at(g, other, route, v)) {
                    best = ClockwiseWitness{r, rp, v};
                    break;
                }
            }
        }
    }
    return best;
}

}  // namespace latframe
