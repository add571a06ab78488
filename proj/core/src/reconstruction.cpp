#include "latframe/reconstruction.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "latframe/coordinates.hpp"

namespace latframe {

namespace {

std::string route_text(const FramedGraph& g, const GeneralizedRoute& s) { return format_route(g, s); }

// A path under construction; left and right ends are not validated.
GeneralizedRoute partial(std::optional<Corner> left, std::vector<EdgeIndex> edges, Vertex first, Vertex last) {
    GeneralizedRoute s;
    s.left = left;
    s.edges = std::move(edges);
    s.first_vertex = first;
    s.last_vertex = last;
    return s;
}

}  // namespace

BrickClique make_brick_clique(const FramedGraph& g, std::vector<GeneralizedRoute> bricks) {
    for (const auto& b : bricks)
        if (!b.is_brick()) throw std::invalid_argument("'" + route_text(g, b) + "' is not a brick");
    if (!is_brick_clique(g, bricks)) throw std::invalid_argument("bricks are not pairwise coherent");
    std::sort(bricks.begin(), bricks.end());
    bricks.erase(std::unique(bricks.begin(), bricks.end()), bricks.end());
    return BrickClique{std::move(bricks)};
}

bool is_brick_clique(const FramedGraph& g, const std::vector<GeneralizedRoute>& bricks) {
    for (std::size_t i = 0; i < bricks.size(); ++i)
        for (std::size_t j = i + 1; j < bricks.size(); ++j)
            if (bricks[i] != bricks[j] && !coherent(g, bricks[i], bricks[j])) return false;
    return true;
}

bool is_cornered_clique(const FramedGraph& g, const CorneredClique& clique) {
    const auto corners = g.corners(clique.side);
    if (clique.routes.size() != corners.size()) return false;
    for (std::size_t k = 0; k < corners.size(); ++k) {
        const auto& r = clique.routes[k];
        const auto& end = clique.side == Side::incoming ? r.left : r.right;
        const bool cornered = clique.side == Side::incoming ? r.is_left_cornered() : r.is_right_cornered();
        if (!cornered || !end || *end != corners[k]) return false;
    }
    for (std::size_t i = 0; i < clique.routes.size(); ++i)
        for (std::size_t j = i + 1; j < clique.routes.size(); ++j)
            if (!coherent(g, clique.routes[i], clique.routes[j])) return false;
    return true;
}

namespace {

BrickClique labels_of(const FramingLattice& L, const std::vector<int>& cover_ids, const char* which) {
    std::vector<GeneralizedRoute> bricks;
    for (auto k : cover_ids) bricks.push_back(L.covers()[static_cast<std::size_t>(k)].label);
    if (!is_brick_clique(L.graph(), bricks))
        throw InvariantError(std::string("bricks labeling the ") + which + " covers of an element are not coherent");
    std::sort(bricks.begin(), bricks.end());
    return BrickClique{std::move(bricks)};
}

}  // namespace

BrickClique down_bricks(const FramingLattice& L, int x) { return labels_of(L, L.lower_covers(x), "lower"); }
BrickClique up_bricks(const FramingLattice& L, int x) { return labels_of(L, L.upper_covers(x), "upper"); }

GeneralizedRoute phi_L(const FramedGraph& g, const BrickClique& T, const Corner& c) {
    if (!c.is_left() || !g.corner_index(c)) throw std::invalid_argument("phi_L needs a left corner of the graph");
    Vertex v = c.apex;
    auto current = partial(c, {}, v, v);
    while (!g.is_sink(v)) {
        const auto outs = g.out_order(v);
        std::optional<EdgeIndex> chosen;
        for (auto it = outs.rbegin(); it != outs.rend() && !chosen; ++it) {
            const EdgeIndex e = *it;
            bool admissible = true;
            for (const auto& t : T.bricks) {
                if (!passes_through(g, t, v)) continue;
                // Equality happens only for the brick sharing corner c.
                if (cmp_preorder(g, v, Side::incoming, current, t) > 0) continue;
                const auto bound = letter_at(g, t, v, Side::outgoing);
                if (bound && extended_letter_compare(g, v, Side::outgoing, Letter{e}, *bound) > 0) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) chosen = e;
        }
        if (!chosen)
            throw InvariantError("first reconstruction from " + format_corner(g, c) + " is stuck at vertex " +
                                 std::to_string(g.external_label(v)));
        current.edges.push_back(*chosen);
        v = g.edge(*chosen).head;
        current.last_vertex = v;
    }
    return make_left_cornered(g, c, std::move(current.edges));
}

CorneredClique phi_L_all(const FramedGraph& g, const BrickClique& T) {
    CorneredClique out{Side::incoming, {}};
    for (const auto& c : g.left_corners()) out.routes.push_back(phi_L(g, T, c));
    if (!is_cornered_clique(g, out)) throw InvariantError("first reconstruction did not produce a left-cornered clique");
    return out;
}

std::vector<ReconstructionSeed> left_seeds(const FramedGraph& g) {
    std::vector<ReconstructionSeed> out;
    for (const auto& c : g.left_corners()) out.emplace_back(c);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (g.is_sink(g.edge(e).head)) out.emplace_back(e);
    return out;
}

GeneralizedRoute psi_L(const FramedGraph& g, const CorneredClique& LT, const ReconstructionSeed& seed) {
    std::vector<EdgeIndex> seed_edges;
    if (const auto* c = std::get_if<Corner>(&seed)) {
        const auto k = g.corner_index(*c);
        if (!c->is_left() || !k) throw std::invalid_argument("psi_L seed is not a left corner");
        const auto& t = LT.routes.at(static_cast<std::size_t>(*k));
        seed_edges.push_back(c->upper);
        seed_edges.insert(seed_edges.end(), t.edges.begin(), t.edges.end());
    } else {
        const EdgeIndex e = std::get<EdgeIndex>(seed);
        if (!g.is_sink(g.edge(e).head)) throw std::invalid_argument("psi_L seed edge does not end at a sink");
        seed_edges.push_back(e);
    }
    Vertex v = g.edge(seed_edges.front()).tail;
    const Vertex sink = g.edge(seed_edges.back()).head;
    auto current = partial(std::nullopt, seed_edges, v, sink);
    while (!g.is_source(v)) {
        std::optional<EdgeIndex> chosen;
        for (auto e : g.in_order(v)) {
            bool admissible = true;
            for (const auto& t : LT.routes) {
                if (!passes_through(g, t, v)) continue;
                if (cmp_preorder(g, v, Side::outgoing, current, t) <= 0) continue;
                const auto bound = letter_at(g, t, v, Side::incoming);
                if (bound && extended_letter_compare(g, v, Side::incoming, Letter{e}, *bound) < 0) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) {
                chosen = e;
                break;
            }
        }
        if (!chosen)
            throw InvariantError("second reconstruction is stuck at vertex " + std::to_string(g.external_label(v)));
        current.edges.insert(current.edges.begin(), *chosen);
        v = g.edge(*chosen).tail;
        current.first_vertex = v;
    }
    return make_route(g, std::move(current.edges));
}

std::vector<GeneralizedRoute> psi_L_routes(const FramedGraph& g, const CorneredClique& LT) {
    if (LT.side != Side::incoming || !is_cornered_clique(g, LT))
        throw std::invalid_argument("psi_L needs a left-cornered clique");
    std::vector<GeneralizedRoute> out;
    for (const auto& seed : left_seeds(g)) out.push_back(psi_L(g, LT, seed));
    std::set<GeneralizedRoute> distinct(out.begin(), out.end());
    if (distinct.size() != out.size()) throw InvariantError("second reconstruction produced a route twice");
    if (static_cast<int>(out.size()) != g.clique_size())
        throw InvariantError("left corners and sink edges do not match the clique size");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!coherent(g, out[i], out[j]))
                throw InvariantError("second reconstruction produced incoherent routes " + route_text(g, out[i]) + " and " +
                                     route_text(g, out[j]));
    return out;
}

MaximalClique psi_L_all(const RouteCatalog& catalog, const CorneredClique& LT) {
    const auto routes = psi_L_routes(catalog.graph(), LT);
    return catalog.clique_of(routes);
}

MaximalClique reconstruct(const RouteCatalog& catalog, const BrickClique& T) {
    return psi_L_all(catalog, phi_L_all(catalog.graph(), T));
}

CorneredClique sigma_L(const FramedGraph& g, std::span<const GeneralizedRoute> clique) {
    CorneredClique out{Side::incoming, {}};
    for (const auto& c : g.left_corners()) {
        const auto cornering = cornering_routes(g, clique, c);
        const auto verts = path_vertices(g, cornering.upper);
        const auto at = std::find(verts.begin(), verts.end(), c.apex) - verts.begin();
        out.routes.push_back(make_left_cornered(g, c, {cornering.upper.edges.begin() + at, cornering.upper.edges.end()}));
    }
    return out;
}

CorneredClique sigma_L(const RouteCatalog& catalog, const MaximalClique& clique) {
    const auto routes = catalog.routes_of(clique);
    return sigma_L(catalog.graph(), routes);
}

Corner transport_ud(const FramedGraph& to, const Corner& c) {
    auto moved = to.corner_between(c.apex, c.side, c.lower, c.upper);
    if (!moved) throw std::invalid_argument("corner does not survive the up-down reflection");
    return *moved;
}

GeneralizedRoute transport_ud(const FramedGraph& to, const GeneralizedRoute& s) {
    std::optional<Corner> left, right;
    if (s.left) left = transport_ud(to, *s.left);
    if (s.right) right = transport_ud(to, *s.right);
    return make_generalized_route(to, left, s.edges, right);
}

Corner transport_lr(const FramedGraph& from, const FramedGraph& to, const Corner& c) {
    const Side flipped = c.side == Side::incoming ? Side::outgoing : Side::incoming;
    auto moved = to.corner_between(mirror_vertex(from, c.apex), flipped, c.lower, c.upper);
    if (!moved) throw std::invalid_argument("corner does not survive the left-right reflection");
    return *moved;
}

GeneralizedRoute transport_lr(const FramedGraph& from, const FramedGraph& to, const GeneralizedRoute& s) {
    std::optional<Corner> left, right;
    if (s.right) left = transport_lr(from, to, *s.right);
    if (s.left) right = transport_lr(from, to, *s.left);
    return make_generalized_route(to, left, {s.edges.rbegin(), s.edges.rend()}, right);
}

namespace {

BrickClique transport_bricks_ud(const FramedGraph& to, const BrickClique& T) {
    std::vector<GeneralizedRoute> moved;
    for (const auto& b : T.bricks) moved.push_back(transport_ud(to, b));
    std::sort(moved.begin(), moved.end());
    return BrickClique{std::move(moved)};
}

BrickClique transport_bricks_lr(const FramedGraph& from, const FramedGraph& to, const BrickClique& T) {
    std::vector<GeneralizedRoute> moved;
    for (const auto& b : T.bricks) moved.push_back(transport_lr(from, to, b));
    std::sort(moved.begin(), moved.end());
    return BrickClique{std::move(moved)};
}

CorneredClique transport_clique_ud(const FramedGraph& to, const CorneredClique& C) {
    CorneredClique out{C.side, {}};
    out.routes.resize(C.routes.size());
    for (const auto& r : C.routes) {
        auto moved = transport_ud(to, r);
        const auto& corner = C.side == Side::incoming ? *moved.left : *moved.right;
        out.routes[static_cast<std::size_t>(*to.corner_index(corner))] = std::move(moved);
    }
    return out;
}

CorneredClique transport_clique_lr(const FramedGraph& from, const FramedGraph& to, const CorneredClique& C) {
    CorneredClique out{C.side == Side::incoming ? Side::outgoing : Side::incoming, {}};
    out.routes.resize(C.routes.size());
    for (const auto& r : C.routes) {
        auto moved = transport_lr(from, to, r);
        const auto& corner = out.side == Side::incoming ? *moved.left : *moved.right;
        out.routes[static_cast<std::size_t>(*to.corner_index(corner))] = std::move(moved);
    }
    return out;
}

ReconstructionSeed transport_seed_ud(const FramedGraph& to, const ReconstructionSeed& seed) {
    if (const auto* c = std::get_if<Corner>(&seed)) return transport_ud(to, *c);
    return seed;
}

ReconstructionSeed transport_seed_lr(const FramedGraph& from, const FramedGraph& to, const ReconstructionSeed& seed) {
    if (const auto* c = std::get_if<Corner>(&seed)) return transport_lr(from, to, *c);
    return seed;
}

}  // namespace

MaximalClique up_reconstruct(const RouteCatalog& catalog, const BrickClique& T) {
    const auto& g = catalog.graph();
    const FramedGraph dual = reflect_ud(g);
    const auto routes = psi_L_routes(dual, phi_L_all(dual, transport_bricks_ud(dual, T)));
    std::vector<GeneralizedRoute> back;
    for (const auto& r : routes) back.push_back(transport_ud(g, r));
    return catalog.clique_of(back);
}

GeneralizedRoute psi_L_dual(const FramedGraph& g, const CorneredClique& LT, const ReconstructionSeed& seed) {
    const FramedGraph dual = reflect_ud(g);
    return transport_ud(g, psi_L(dual, transport_clique_ud(dual, LT), transport_seed_ud(dual, seed)));
}

MaximalClique psi_L_dual_all(const RouteCatalog& catalog, const CorneredClique& LT) {
    const auto& g = catalog.graph();
    const FramedGraph dual = reflect_ud(g);
    std::vector<GeneralizedRoute> back;
    for (const auto& r : psi_L_routes(dual, transport_clique_ud(dual, LT))) back.push_back(transport_ud(g, r));
    return catalog.clique_of(back);
}

GeneralizedRoute phi_R(const FramedGraph& g, const BrickClique& T, const Corner& right_corner) {
    if (right_corner.is_left()) throw std::invalid_argument("phi_R needs a right corner");
    const FramedGraph mirror = reflect_lr(g);
    const auto grown = phi_L(mirror, transport_bricks_lr(g, mirror, T), transport_lr(g, mirror, right_corner));
    return transport_lr(mirror, g, grown);
}

CorneredClique phi_R_all(const FramedGraph& g, const BrickClique& T) {
    const FramedGraph mirror = reflect_lr(g);
    return transport_clique_lr(mirror, g, phi_L_all(mirror, transport_bricks_lr(g, mirror, T)));
}

GeneralizedRoute psi_R(const FramedGraph& g, const CorneredClique& RT, const ReconstructionSeed& seed) {
    const FramedGraph mirror = reflect_lr(g);
    const auto route = psi_L(mirror, transport_clique_lr(g, mirror, RT), transport_seed_lr(g, mirror, seed));
    return transport_lr(mirror, g, route);
}

MaximalClique psi_R_all(const RouteCatalog& catalog, const CorneredClique& RT) {
    const auto& g = catalog.graph();
    const FramedGraph mirror = reflect_lr(g);
    std::vector<GeneralizedRoute> back;
    for (const auto& r : psi_L_routes(mirror, transport_clique_lr(g, mirror, RT))) back.push_back(transport_lr(mirror, g, r));
    return catalog.clique_of(back);
}

CorneredClique sigma_R(const RouteCatalog& catalog, const MaximalClique& clique) {
    const auto& g = catalog.graph();
    const FramedGraph mirror = reflect_lr(g);
    std::vector<GeneralizedRoute> moved;
    for (const auto& r : catalog.routes_of(clique)) moved.push_back(transport_lr(g, mirror, r));
    return transport_clique_lr(mirror, g, sigma_L(mirror, moved));
}

int rowmotion(const FramingLattice& L, int x) {
    return L.index_of(reconstruct(L.catalog(), up_bricks(L, x)));
}

std::vector<BrickClique> brick_complex_faces(const FramedGraph& g, int max_size) {
    const auto bricks = enumerate_bricks(g);
    const auto n = bricks.size();
    std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            compatible[i][j] = compatible[j][i] = coherent(g, bricks[i], bricks[j]);

    std::vector<BrickClique> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        BrickClique face;
        for (auto k : chosen) face.bricks.push_back(bricks[k]);
        out.push_back(std::move(face));
        if (max_size >= 0 && static_cast<int>(chosen.size()) >= max_size) return;
        for (std::size_t k = from; k < n; ++k) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible[c][k]; })) continue;
            chosen.push_back(k);
            extend(k + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    std::stable_sort(out.begin(), out.end(), [](const BrickClique& a, const BrickClique& b) {
        if (a.bricks.size() != b.bricks.size()) return a.bricks.size() < b.bricks.size();
        return a.bricks < b.bricks;
    });
    return out;
}

}  // namespace latframe
