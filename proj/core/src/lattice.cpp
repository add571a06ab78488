#include "latframe/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace latframe {

namespace {

// Number of source-to-sink paths, saturating at `cap`.
std::size_t count_routes(const FramedGraph& g, std::size_t cap) {
    std::vector<std::size_t> from(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::size_t total = 0;
    for (Vertex v = g.vertex_count(); v >= 1; --v) {
        std::size_t n = 0;
        if (g.is_sink(v)) n = 1;
        for (auto e : g.out_order(v)) n = std::min(cap, n + from[static_cast<std::size_t>(g.edge(e).head)]);
        from[static_cast<std::size_t>(v)] = n;
        if (g.is_source(v)) total = std::min(cap, total + n);
    }
    return total;
}

std::string clique_text(const RouteCatalog& catalog, const MaximalClique& c) {
    std::string out = "{";
    for (auto r : c.routes) {
        if (out.size() > 1) out += ", ";
        out += format_route(catalog.graph(), catalog.route(r));
    }
    return out + "}";
}

std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

RouteCatalog::RouteCatalog(FramedGraph g, std::size_t route_limit) : graph_(std::move(g)) {
    const std::size_t count = count_routes(graph_, route_limit + 1);
    if (count > route_limit)
        throw LimitError("graph has more than " + std::to_string(route_limit) + " routes");
    routes_ = enumerate_routes(graph_);
    for (std::size_t i = 0; i < routes_.size(); ++i) by_edges_.emplace(routes_[i].edges, static_cast<int>(i));

    const auto n = routes_.size();
    coherent_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        coherent_[a].set(a);
        for (std::size_t b = a + 1; b < n; ++b) {
            if (latframe::coherent(graph_, routes_[a], routes_[b])) {
                coherent_[a].set(b);
                coherent_[b].set(a);
            }
        }
    }
}

std::optional<int> RouteCatalog::find(const std::vector<EdgeIndex>& edges) const {
    auto it = by_edges_.find(edges);
    if (it == by_edges_.end()) return std::nullopt;
    return it->second;
}

int RouteCatalog::index_of(const std::vector<EdgeIndex>& edges) const {
    auto i = find(edges);
    if (!i) throw std::invalid_argument("not a route of the graph");
    return *i;
}

MaximalClique RouteCatalog::clique_of(std::span<const GeneralizedRoute> routes) const {
    MaximalClique c;
    for (const auto& r : routes) {
        if (!r.is_plain()) throw std::invalid_argument("clique members must be routes");
        c.routes.push_back(index_of(r.edges));
    }
    std::sort(c.routes.begin(), c.routes.end());
    return c;
}

std::vector<GeneralizedRoute> RouteCatalog::routes_of(const MaximalClique& c) const {
    std::vector<GeneralizedRoute> out;
    out.reserve(c.routes.size());
    for (auto r : c.routes) out.push_back(route(r));
    return out;
}

bool RouteCatalog::is_maximal_clique(const MaximalClique& c) const {
    if (static_cast<int>(c.routes.size()) != graph_.clique_size()) return false;
    if (std::adjacent_find(c.routes.begin(), c.routes.end()) != c.routes.end()) return false;
    for (std::size_t i = 0; i < c.routes.size(); ++i)
        for (std::size_t j = i + 1; j < c.routes.size(); ++j)
            if (!coherent(c.routes[i], c.routes[j])) return false;
    return true;
}

std::vector<MaximalClique> maximal_cliques(const RouteCatalog& catalog) {
    const auto n = static_cast<std::size_t>(catalog.size());
    std::vector<Bitset> neighbors;
    neighbors.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        neighbors.push_back(catalog.coherent_with(static_cast<int>(v)));
        neighbors.back().reset(v);
    }

    std::vector<MaximalClique> out;
    std::vector<int> current;
    std::function<void(Bitset, Bitset)> expand = [&](Bitset candidates, Bitset excluded) {
        if (candidates.none() && excluded.none()) {
            MaximalClique c{current};
            std::sort(c.routes.begin(), c.routes.end());
            out.push_back(std::move(c));
            return;
        }
        // Pivot on the vertex covering the most candidates.
        const Bitset either = candidates | excluded;
        std::size_t pivot = either.find_first();
        std::size_t best = 0;
        for (auto u = either.find_first(); u != Bitset::npos; u = either.find_next(u)) {
            const auto covered = (candidates & neighbors[u]).count();
            if (covered > best || u == either.find_first()) {
                best = covered;
                pivot = u;
            }
        }
        const Bitset branch = candidates - neighbors[pivot];
        for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
            current.push_back(static_cast<int>(v));
            expand(candidates & neighbors[v], excluded & neighbors[v]);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    };
    Bitset all(n);
    all.set();
    if (n > 0) expand(all, Bitset(n));

    const auto expected = static_cast<std::size_t>(catalog.graph().clique_size());
    for (const auto& c : out)
        if (c.routes.size() != expected)
            throw InvariantError("maximal clique " + clique_text(catalog, c) + " has " + std::to_string(c.routes.size()) +
                                 " routes, expected " + std::to_string(expected));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MaximalClique> flip_graph_cliques(const RouteCatalog& catalog, const MaximalClique& start) {
    const auto n = static_cast<std::size_t>(catalog.size());
    std::set<MaximalClique> seen{start};
    std::queue<MaximalClique> todo;
    todo.push(start);
    while (!todo.empty()) {
        const MaximalClique c = todo.front();
        todo.pop();
        for (std::size_t k = 0; k < c.routes.size(); ++k) {
            Bitset candidates(n);
            candidates.set();
            for (std::size_t j = 0; j < c.routes.size(); ++j) {
                if (j != k) candidates &= catalog.coherent_with(c.routes[j]);
            }
            for (auto r : c.routes) candidates.reset(static_cast<std::size_t>(r));
            if (candidates.count() > 1)
                throw InvariantError("a codimension-one face of " + clique_text(catalog, c) +
                                     " lies in more than two maximal cliques");
            if (candidates.none()) continue;
            MaximalClique next = c;
            next.routes[k] = static_cast<int>(candidates.find_first());
            std::sort(next.routes.begin(), next.routes.end());
            if (seen.insert(next).second) todo.push(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<Adjacency> adjacent(const RouteCatalog& catalog, const MaximalClique& a, const MaximalClique& b) {
    const auto only_a = difference(a.routes, b.routes);
    const auto only_b = difference(b.routes, a.routes);
    if (only_a.size() != 1 || only_b.size() != 1) return std::nullopt;

    const auto& g = catalog.graph();
    Adjacency adj;
    adj.removed = only_a.front();
    adj.added = only_b.front();
    const auto& r = catalog.route(adj.removed);
    const auto& rp = catalog.route(adj.added);

    auto conflicts = conflict_subroutes(g, r, rp);
    if (conflicts.size() != 1)
        throw InvariantError("exchanged routes " + format_route(g, r) + " and " + format_route(g, rp) + " have " +
                             std::to_string(conflicts.size()) + " conflict subroutes");
    adj.conflict = conflicts.front();

    // r = r1 s r2 and r' = r1' s r2'; both recombinations must be shared.
    const auto split = [&](const GeneralizedRoute& route) {
        const auto verts = path_vertices(g, route);
        const auto at = std::find(verts.begin(), verts.end(), adj.conflict.start) - verts.begin();
        std::vector<EdgeIndex> head(route.edges.begin(), route.edges.begin() + at);
        std::vector<EdgeIndex> tail(route.edges.begin() + at + static_cast<std::ptrdiff_t>(adj.conflict.edges.size()),
                                    route.edges.end());
        return std::pair{head, tail};
    };
    const auto [r1, r2] = split(r);
    const auto [rp1, rp2] = split(rp);
    for (const auto& [front, back] : {std::pair{r1, rp2}, std::pair{rp1, r2}}) {
        std::vector<EdgeIndex> edges = front;
        edges.insert(edges.end(), adj.conflict.edges.begin(), adj.conflict.edges.end());
        edges.insert(edges.end(), back.begin(), back.end());
        const auto idx = catalog.find(edges);
        if (!idx || !std::binary_search(a.routes.begin(), a.routes.end(), *idx) ||
            !std::binary_search(b.routes.begin(), b.routes.end(), *idx))
            throw InvariantError("recombination of " + format_route(g, r) + " and " + format_route(g, rp) +
                                 " through their conflict is missing from the shared routes");
    }

    const Vertex v = adj.conflict.start;
    const bool forward = is_clockwise_at(g, r, rp, v);
    const bool backward = is_clockwise_at(g, rp, r, v);
    if (forward == backward)
        throw InvariantError("exchanged routes " + format_route(g, r) + " and " + format_route(g, rp) +
                             " are not in clockwise position at their conflict");
    adj.removed_is_clockwise = forward;
    return adj;
}

namespace {

GeneralizedRoute label_of(const RouteCatalog& catalog, const Adjacency& adj) {
    const auto& g = catalog.graph();
    const auto& r = catalog.route(adj.removed);
    const auto& rp = catalog.route(adj.added);
    const auto edge_into = [&](const GeneralizedRoute& route, Vertex v) {
        const auto verts = path_vertices(g, route);
        const auto at = std::find(verts.begin(), verts.end(), v) - verts.begin();
        if (at == 0) throw InvariantError("conflict starts at the first vertex of " + format_route(g, route));
        return route.edges[static_cast<std::size_t>(at) - 1];
    };
    const auto edge_out_of = [&](const GeneralizedRoute& route, Vertex v) {
        const auto verts = path_vertices(g, route);
        const auto at = static_cast<std::size_t>(std::find(verts.begin(), verts.end(), v) - verts.begin());
        if (at >= route.edges.size()) throw InvariantError("conflict ends at the last vertex of " + format_route(g, route));
        return route.edges[at];
    };
    const Vertex start = adj.conflict.start;
    const Vertex end = adj.conflict.end;
    const auto left = g.corner_between(start, Side::incoming, edge_into(r, start), edge_into(rp, start));
    const auto right = g.corner_between(end, Side::outgoing, edge_out_of(r, end), edge_out_of(rp, end));
    if (!left || !right)
        throw InvariantError("edges around the conflict of " + format_route(g, r) + " and " + format_route(g, rp) +
                             " are not consecutive in the framing");
    return make_brick(g, *left, adj.conflict.edges, *right);
}

}  // namespace

GeneralizedRoute cover_label(const RouteCatalog& catalog, const MaximalClique& lower, const MaximalClique& upper) {
    auto adj = adjacent(catalog, lower, upper);
    if (!adj || !adj->removed_is_clockwise) throw std::invalid_argument("cliques do not form a cover in this direction");
    return label_of(catalog, *adj);
}

FramingLattice FramingLattice::build(const FramedGraph& g, const LatticeOptions& options) {
    FramingLattice L(RouteCatalog(g, options.route_limit));
    const auto& catalog = L.catalog_;
    L.elements_ = maximal_cliques(catalog);
    const int n = L.size();
    for (int x = 0; x < n; ++x) L.index_.emplace(L.elements_[static_cast<std::size_t>(x)], x);

    // Adjacent cliques share the face obtained by dropping one route.
    std::map<std::vector<int>, std::vector<int>> faces;
    for (int x = 0; x < n; ++x) {
        const auto& routes = L.elements_[static_cast<std::size_t>(x)].routes;
        for (std::size_t k = 0; k < routes.size(); ++k) {
            std::vector<int> face = routes;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
            faces[std::move(face)].push_back(x);
        }
    }
    L.lower_.assign(static_cast<std::size_t>(n), {});
    L.upper_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [face, owners] : faces) {
        if (owners.size() > 2) throw InvariantError("a codimension-one face lies in more than two maximal cliques");
        if (owners.size() < 2) continue;
        int a = owners[0];
        int b = owners[1];
        auto adj = adjacent(catalog, L.elements_[static_cast<std::size_t>(a)], L.elements_[static_cast<std::size_t>(b)]);
        if (!adj) throw InvariantError("cliques sharing a face are not adjacent");
        if (!adj->removed_is_clockwise) {
            std::swap(a, b);
            adj = adjacent(catalog, L.elements_[static_cast<std::size_t>(a)], L.elements_[static_cast<std::size_t>(b)]);
        }
        L.covers_.push_back({a, b, label_of(catalog, *adj)});
    }
    std::sort(L.covers_.begin(), L.covers_.end(),
              [](const CoverEdge& x, const CoverEdge& y) { return std::pair{x.lower, x.upper} < std::pair{y.lower, y.upper}; });
    for (std::size_t k = 0; k < L.covers_.size(); ++k) {
        L.upper_[static_cast<std::size_t>(L.covers_[k].lower)].push_back(static_cast<int>(k));
        L.lower_[static_cast<std::size_t>(L.covers_[k].upper)].push_back(static_cast<int>(k));
    }

    // Kahn's algorithm; a leftover element means a directed cycle.
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (const auto& c : L.covers_) ++indegree[static_cast<std::size_t>(c.upper)];
    std::queue<int> ready;
    for (int x = 0; x < n; ++x)
        if (indegree[static_cast<std::size_t>(x)] == 0) ready.push(x);
    while (!ready.empty()) {
        int x = ready.front();
        ready.pop();
        L.topo_.push_back(x);
        for (auto k : L.upper_[static_cast<std::size_t>(x)]) {
            const auto up = static_cast<std::size_t>(L.covers_[static_cast<std::size_t>(k)].upper);
            if (--indegree[up] == 0) ready.push(static_cast<int>(up));
        }
    }
    if (static_cast<int>(L.topo_.size()) != n) throw InvariantError("rotation digraph has a directed cycle");

    L.up_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    L.down_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto it = L.topo_.rbegin(); it != L.topo_.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        L.up_[x].set(x);
        for (auto k : L.upper_[x]) L.up_[x] |= L.up_[static_cast<std::size_t>(L.covers_[static_cast<std::size_t>(k)].upper)];
    }
    for (auto x : L.topo_) {
        const auto sx = static_cast<std::size_t>(x);
        L.down_[sx].set(sx);
        for (auto k : L.lower_[sx]) L.down_[sx] |= L.down_[static_cast<std::size_t>(L.covers_[static_cast<std::size_t>(k)].lower)];
    }
    L.up_count_.resize(static_cast<std::size_t>(n));
    L.down_count_.resize(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < static_cast<std::size_t>(n); ++x) {
        L.up_count_[x] = L.up_[x].count();
        L.down_count_[x] = L.down_[x].count();
    }

    // A cover must not be implied by a longer chain.
    for (const auto& c : L.covers_) {
        for (auto k : L.upper_[static_cast<std::size_t>(c.lower)]) {
            const int other = L.covers_[static_cast<std::size_t>(k)].upper;
            if (other != c.upper && L.leq(other, c.upper))
                throw InvariantError("rotation " + std::to_string(c.lower) + " -> " + std::to_string(c.upper) +
                                     " is not a cover of the reachability order");
        }
    }

    std::vector<int> minimal, maximal;
    for (int x = 0; x < n; ++x) {
        if (L.lower_[static_cast<std::size_t>(x)].empty()) minimal.push_back(x);
        if (L.upper_[static_cast<std::size_t>(x)].empty()) maximal.push_back(x);
    }
    if (minimal.size() != 1 || maximal.size() != 1)
        throw InvariantError("rotation order does not have a unique bottom and top");
    L.bottom_ = minimal.front();
    L.top_ = maximal.front();

    if (n <= options.table_limit) {
        const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        L.join_table_.assign(cells, -1);
        L.meet_table_.assign(cells, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                const int j = L.compute_join(a, b);
                const int m = L.compute_meet(a, b);
                const auto ab = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
                const auto ba = static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
                L.join_table_[ab] = L.join_table_[ba] = j;
                L.meet_table_[ab] = L.meet_table_[ba] = m;
            }
        }
    } else if (options.verify_lattice) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                L.compute_join(a, b);
                L.compute_meet(a, b);
            }
    }
    return L;
}

std::optional<int> FramingLattice::find(const MaximalClique& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FramingLattice::index_of(const MaximalClique& c) const {
    auto x = find(c);
    if (!x) throw std::invalid_argument("not an element of the framing lattice: " + clique_text(catalog_, c));
    return *x;
}

int FramingLattice::compute_join(int a, int b) const {
    const Bitset bounds = up_[static_cast<std::size_t>(a)] & up_[static_cast<std::size_t>(b)];
    const auto count = bounds.count();
    for (auto u = bounds.find_first(); u != Bitset::npos; u = bounds.find_next(u))
        if (up_count_[u] == count) return static_cast<int>(u);
    throw InvariantError("elements " + std::to_string(a) + " and " + std::to_string(b) + " have no least upper bound");
}

int FramingLattice::compute_meet(int a, int b) const {
    const Bitset bounds = down_[static_cast<std::size_t>(a)] & down_[static_cast<std::size_t>(b)];
    const auto count = bounds.count();
    for (auto u = bounds.find_first(); u != Bitset::npos; u = bounds.find_next(u))
        if (down_count_[u] == count) return static_cast<int>(u);
    throw InvariantError("elements " + std::to_string(a) + " and " + std::to_string(b) + " have no greatest lower bound");
}

int FramingLattice::join(int a, int b) const {
    if (!join_table_.empty())
        return join_table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
    return compute_join(a, b);
}

int FramingLattice::meet(int a, int b) const {
    if (!meet_table_.empty())
        return meet_table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
    return compute_meet(a, b);
}

bool check_semidistributive(const FramingLattice& L) {
    const int n = L.size();
    std::vector<int> acc(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        // join-semidistributivity: {y : x v y = w} is closed under meets.
        std::fill(acc.begin(), acc.end(), -1);
        for (int y = 0; y < n; ++y) {
            auto& slot = acc[static_cast<std::size_t>(L.join(x, y))];
            slot = slot < 0 ? y : L.meet(slot, y);
        }
        for (int w = 0; w < n; ++w)
            if (acc[static_cast<std::size_t>(w)] >= 0 && L.join(x, acc[static_cast<std::size_t>(w)]) != w) return false;

        std::fill(acc.begin(), acc.end(), -1);
        for (int y = 0; y < n; ++y) {
            auto& slot = acc[static_cast<std::size_t>(L.meet(x, y))];
            slot = slot < 0 ? y : L.join(slot, y);
        }
        for (int w = 0; w < n; ++w)
            if (acc[static_cast<std::size_t>(w)] >= 0 && L.meet(x, acc[static_cast<std::size_t>(w)]) != w) return false;
    }
    return true;
}

bool is_join_irreducible(const FramingLattice& L, int x) { return L.lower_covers(x).size() == 1; }
bool is_meet_irreducible(const FramingLattice& L, int x) { return L.upper_covers(x).size() == 1; }

std::vector<int> join_irreducibles(const FramingLattice& L) {
    std::vector<int> out;
    for (int x = 0; x < L.size(); ++x)
        if (is_join_irreducible(L, x)) out.push_back(x);
    return out;
}

std::vector<int> meet_irreducibles(const FramingLattice& L) {
    std::vector<int> out;
    for (int x = 0; x < L.size(); ++x)
        if (is_meet_irreducible(L, x)) out.push_back(x);
    return out;
}

int cover_join_label(const FramingLattice& L, const CoverEdge& cover) {
    const auto n = static_cast<std::size_t>(L.size());
    Bitset solutions(n);
    const auto& below = L.down_set(cover.upper);
    for (auto j = below.find_first(); j != Bitset::npos; j = below.find_next(j))
        if (L.join(static_cast<int>(j), cover.lower) == cover.upper) solutions.set(j);
    std::vector<int> minimal;
    for (auto j = solutions.find_first(); j != Bitset::npos; j = solutions.find_next(j))
        if ((solutions & L.down_set(static_cast<int>(j))).count() == 1) minimal.push_back(static_cast<int>(j));
    if (minimal.size() != 1)
        throw InvariantError("cover " + std::to_string(cover.lower) + " < " + std::to_string(cover.upper) + " has " +
                             std::to_string(minimal.size()) + " minimal join labels");
    return minimal.front();
}

int cover_meet_label(const FramingLattice& L, const CoverEdge& cover) {
    const auto n = static_cast<std::size_t>(L.size());
    Bitset solutions(n);
    const auto& above = L.up_set(cover.lower);
    for (auto m = above.find_first(); m != Bitset::npos; m = above.find_next(m))
        if (L.meet(static_cast<int>(m), cover.upper) == cover.lower) solutions.set(m);
    std::vector<int> maximal;
    for (auto m = solutions.find_first(); m != Bitset::npos; m = solutions.find_next(m))
        if ((solutions & L.up_set(static_cast<int>(m))).count() == 1) maximal.push_back(static_cast<int>(m));
    if (maximal.size() != 1)
        throw InvariantError("cover " + std::to_string(cover.lower) + " < " + std::to_string(cover.upper) + " has " +
                             std::to_string(maximal.size()) + " maximal meet labels");
    return maximal.front();
}

std::vector<int> canonical_join_representation(const FramingLattice& L, int x) {
    std::vector<int> out;
    for (auto k : L.lower_covers(x)) out.push_back(cover_join_label(L, L.covers()[static_cast<std::size_t>(k)]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_meet_representation(const FramingLattice& L, int x) {
    std::vector<int> out;
    for (auto k : L.upper_covers(x)) out.push_back(cover_meet_label(L, L.covers()[static_cast<std::size_t>(k)]));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string to_dot(const FramingLattice& L, std::span<const std::vector<int>> coordinates) {
    std::ostringstream out;
    out << "digraph framing_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (int x = 0; x < L.size(); ++x) {
        std::string label = std::to_string(x);
        if (!coordinates.empty()) {
            label += "\\n(";
            const auto& v = coordinates[static_cast<std::size_t>(x)];
            for (std::size_t k = 0; k < v.size(); ++k) label += (k ? "," : "") + std::to_string(v[k]);
            label += ")";
        }
        out << "  n" << x << " [label=\"" << label << "\"];\n";
    }
    for (const auto& c : L.covers())
        out << "  n" << c.lower << " -> n" << c.upper << " [label=\"" << dot_escape(format_route(L.graph(), c.label))
            << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace latframe
