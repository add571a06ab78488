#include "latframe/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "latframe/coordinates.hpp"
#include "latframe/oracle.hpp"
#include "latframe/reconstruction.hpp"

namespace latframe {

std::string_view property_name(Property p) {
    switch (p) {
        case Property::structure: return "structure";
        case Property::round_trips: return "round-trips";
        case Property::greedy_oracles: return "greedy-vs-oracle";
        case Property::cornering: return "cornering";
        case Property::cube_embedding: return "cube-embedding";
        case Property::comparison: return "comparison";
        case Property::lattice_theory: return "lattice-theory";
        case Property::duality: return "duality";
    }
    return "unknown";
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* SuiteReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

bool semidistributive_by_triples(const FramingLattice& L) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = y; z < n; ++z) {
                const int xy = L.join(x, y);
                if (xy == L.join(x, z) && L.join(x, L.meet(y, z)) != xy) return false;
                const int mxy = L.meet(x, y);
                if (mxy == L.meet(x, z) && L.meet(x, L.join(y, z)) != mxy) return false;
            }
    return true;
}

namespace {

using Failure = std::optional<std::string>;

std::string clique_text(const RouteCatalog& catalog, const MaximalClique& c) {
    std::string out = "{";
    for (std::size_t k = 0; k < c.routes.size(); ++k) {
        if (k) out += ", ";
        out += format_route(catalog.graph(), catalog.route(c.routes[k]));
    }
    return out + "}";
}

std::string bricks_text(const FramedGraph& g, const std::vector<GeneralizedRoute>& bricks) {
    std::string out = "{";
    for (std::size_t k = 0; k < bricks.size(); ++k) {
        if (k) out += ", ";
        out += format_route(g, bricks[k]);
    }
    return out + "}";
}

std::string vector_text(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

class Runner {
public:
    explicit Runner(SuiteReport& report) : report_(report) {}

    void operator()(Property p, std::string name, const std::function<Failure()>& body) {
        CheckResult result{p, std::move(name), true, {}};
        try {
            if (auto failure = body()) {
                result.passed = false;
                result.detail = std::move(*failure);
            }
        } catch (const LimitError&) {
            throw;
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(result));
    }

private:
    SuiteReport& report_;
};

// Element of `other` with the same routes as element x of L, after mapping
// each route through `move`.
template <typename Move>
std::optional<std::vector<int>> element_map(const FramingLattice& L, const FramingLattice& other, Move move) {
    std::vector<int> out;
    for (const auto& element : L.elements()) {
        std::vector<GeneralizedRoute> moved;
        for (auto r : element.routes) moved.push_back(move(L.catalog().route(r)));
        const auto found = other.find(other.catalog().clique_of(moved));
        if (!found) return std::nullopt;
        out.push_back(*found);
    }
    return out;
}

Failure check_anti_isomorphism(const FramingLattice& L, const FramingLattice& other, const std::vector<int>& map) {
    if (other.size() != L.size()) return "element counts differ";
    std::set<int> image(map.begin(), map.end());
    if (static_cast<int>(image.size()) != L.size()) return "route transport is not injective on cliques";
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
            if (L.leq(a, b) != other.leq(map[static_cast<std::size_t>(b)], map[static_cast<std::size_t>(a)]))
                return "order not reversed between elements " + std::to_string(a) + " and " + std::to_string(b);
    return std::nullopt;
}

}  // namespace

SuiteReport run_invariants(const FramedGraph& g, const SuiteOptions& options, std::string name) {
    SuiteReport report;
    report.graph = std::move(name);
    Runner check(report);

    LatticeOptions lattice_options;
    lattice_options.route_limit = options.route_limit;
    // Probe the route count first so that the limit surfaces as an exception.
    { RouteCatalog probe(g, options.route_limit); }

    std::optional<FramingLattice> built;
    check(Property::structure, "lattice builds", [&]() -> Failure {
        built.emplace(FramingLattice::build(g, lattice_options));
        return std::nullopt;
    });
    if (!built) return report;
    const FramingLattice& L = *built;
    const RouteCatalog& catalog = L.catalog();
    const auto bricks = enumerate_bricks(g);
    const auto corners = g.left_corners();
    report.observed.elements = L.size();
    report.observed.covers = static_cast<int>(L.covers().size());
    report.observed.bricks = static_cast<int>(bricks.size());

    // ---- structure ----------------------------------------------------------
    check(Property::structure, "serialization round trip", [&]() -> Failure {
        const auto text = serialize(g);
        const auto back = parse_framed_graph(text);
        if (!(back == g)) return "parse(serialize(G)) differs from G";
        if (serialize(back) != text) return "serialization is not byte-stable";
        return std::nullopt;
    });
    check(Property::structure, "reflections are commuting involutions", [&]() -> Failure {
        if (!(reflect_ud(reflect_ud(g)) == g)) return "reflect_ud is not an involution";
        if (!(reflect_lr(reflect_lr(g)) == g)) return "reflect_lr is not an involution";
        if (!same_up_to_edge_order(reflect_ud(reflect_lr(g)), reflect_lr(reflect_ud(g))))
            return "the two reflections do not commute";
        return std::nullopt;
    });
    check(Property::structure, "corner counts", [&]() -> Failure {
        int left = 0, right = 0;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (!g.is_internal(v)) continue;
            left += static_cast<int>(g.in_order(v).size()) - 1;
            right += static_cast<int>(g.out_order(v).size()) - 1;
        }
        if (left != static_cast<int>(g.left_corners().size())) return "left corner count mismatch";
        if (right != static_cast<int>(g.right_corners().size())) return "right corner count mismatch";
        return std::nullopt;
    });
    check(Property::structure, "cliques are maximal and of formula size", [&]() -> Failure {
        for (const auto& element : L.elements()) {
            if (static_cast<int>(element.routes.size()) != g.clique_size() || !catalog.is_maximal_clique(element))
                return "clique " + clique_text(catalog, element);
            for (auto a : element.routes)
                for (auto b : element.routes)
                    if (!is_coherent(coherence(g, catalog.route(a), catalog.route(b))))
                        return "incoherent pair in " + clique_text(catalog, element);
        }
        return std::nullopt;
    });
    check(Property::structure, "flip graph reaches exactly the enumerated cliques", [&]() -> Failure {
        const auto flipped = flip_graph_cliques(catalog, L.element(L.bottom()));
        if (!std::equal(flipped.begin(), flipped.end(), L.elements().begin(), L.elements().end()))
            return std::to_string(flipped.size()) + " cliques by flips, " + std::to_string(L.size()) + " by enumeration";
        return std::nullopt;
    });
    check(Property::structure, "every brick is clockwise to some route at its left corner", [&]() -> Failure {
        for (const auto& b : bricks) {
            const Vertex v = b.left->apex;
            const bool found = std::any_of(catalog.routes().begin(), catalog.routes().end(), [&](const auto& r) {
                return passes_through(g, r, v) && is_clockwise_at(g, b, r, v);
            });
            if (!found) return format_route(g, b);
        }
        return std::nullopt;
    });
    check(Property::structure, "cover labels sit between the exchanged routes", [&]() -> Failure {
        for (const auto& cover : L.covers()) {
            const auto adj = adjacent(catalog, L.element(cover.lower), L.element(cover.upper));
            if (!adj || !adj->removed_is_clockwise) return "cover " + std::to_string(cover.lower) + " -> " +
                                                              std::to_string(cover.upper) + " is not a rotation";
            const Vertex v = cover.label.left->apex;
            const auto& removed = catalog.route(adj->removed);
            const auto& added = catalog.route(adj->added);
            if (!is_clockwise_at(g, cover.label, added, v) || !is_clockwise_at(g, removed, cover.label, v))
                return "label " + format_route(g, cover.label);
        }
        return std::nullopt;
    });

    // ---- round trips --------------------------------------------------------
    const auto faces = brick_complex_faces(g);
    check(Property::round_trips, "brick cliques and elements are equinumerous", [&]() -> Failure {
        if (static_cast<int>(faces.size()) != L.size())
            return std::to_string(faces.size()) + " brick cliques, " + std::to_string(L.size()) + " elements";
        return std::nullopt;
    });
    check(Property::round_trips, "down_bricks after reconstruction is the identity", [&]() -> Failure {
        for (const auto& T : faces) {
            const int x = L.index_of(reconstruct(catalog, T));
            if (!(down_bricks(L, x) == T)) return "brick clique " + bricks_text(g, T.bricks);
        }
        return std::nullopt;
    });
    check(Property::round_trips, "reconstruction after down_bricks is the identity", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x)
            if (L.index_of(reconstruct(catalog, down_bricks(L, x))) != x) return "element " + std::to_string(x);
        return std::nullopt;
    });
    check(Property::round_trips, "up_bricks after dual reconstruction is the identity", [&]() -> Failure {
        for (const auto& T : faces) {
            const int x = L.index_of(up_reconstruct(catalog, T));
            if (!(up_bricks(L, x) == T)) return "brick clique " + bricks_text(g, T.bricks);
        }
        return std::nullopt;
    });
    check(Property::round_trips, "dual reconstruction after up_bricks is the identity", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x)
            if (L.index_of(up_reconstruct(catalog, up_bricks(L, x))) != x) return "element " + std::to_string(x);
        return std::nullopt;
    });
    check(Property::round_trips, "right reconstruction inverts up_bricks", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x)
            if (L.index_of(psi_R_all(catalog, phi_R_all(g, up_bricks(L, x)))) != x) return "element " + std::to_string(x);
        return std::nullopt;
    });

    // ---- greedy steps against brute force -----------------------------------
    check(Property::greedy_oracles, "first step equals the largest weakly coherent cornered route", [&]() -> Failure {
        for (const auto& T : faces)
            for (const auto& c : corners) {
                const auto greedy = phi_L(g, T, c);
                const auto oracle = phi_L_oracle(g, T, c);
                if (!oracle || !(*oracle == greedy))
                    return "T = " + bricks_text(g, T.bricks) + ", corner " + format_corner(g, c) + ": greedy " +
                           format_route(g, greedy) + ", oracle " + (oracle ? format_route(g, *oracle) : "none");
            }
        return std::nullopt;
    });
    check(Property::greedy_oracles, "second step equals the smallest coherent route through the seed", [&]() -> Failure {
        for (const auto& T : faces) {
            const auto LT = phi_L_all(g, T);
            for (const auto& seed : left_seeds(g)) {
                const auto greedy = psi_L(g, LT, seed);
                const auto oracle = psi_L_oracle(g, LT, seed);
                if (!oracle || !(*oracle == greedy))
                    return "T = " + bricks_text(g, T.bricks) + ": greedy " + format_route(g, greedy) + ", oracle " +
                           (oracle ? format_route(g, *oracle) : "none");
            }
        }
        return std::nullopt;
    });

    // ---- cornering ----------------------------------------------------------
    check(Property::cornering, "second step after cornering is the identity", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x)
            if (!(psi_L_all(catalog, sigma_L(catalog, L.element(x))) == L.element(x)))
                return "element " + clique_text(catalog, L.element(x));
        return std::nullopt;
    });
    check(Property::cornering, "cornering after the second step is the identity", [&]() -> Failure {
        for (const auto& T : faces) {
            const auto LT = phi_L_all(g, T);
            if (!(sigma_L(catalog, psi_L_all(catalog, LT)) == LT)) return "T = " + bricks_text(g, T.bricks);
        }
        return std::nullopt;
    });
    check(Property::cornering, "a route is a cornering route at no more than one corner per role", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x) {
            const auto routes = catalog.routes_of(L.element(x));
            std::set<std::vector<EdgeIndex>> lowers, uppers;
            for (const auto& c : corners) {
                const auto cr = cornering_routes(g, routes, c);
                if (!lowers.insert(cr.lower.edges).second) return "lower route repeated in element " + std::to_string(x);
                if (!uppers.insert(cr.upper.edges).second) return "upper route repeated in element " + std::to_string(x);
            }
        }
        return std::nullopt;
    });
    check(Property::cornering, "right cornering is inverted by the right second step", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x)
            if (!(psi_R_all(catalog, sigma_R(catalog, L.element(x))) == L.element(x))) return "element " + std::to_string(x);
        return std::nullopt;
    });

    // ---- cube embedding -----------------------------------------------------
    std::vector<CubicalCoordinates> ccl_of, ccr_of;
    check(Property::cube_embedding, "coordinates are within range", [&]() -> Failure {
        ccl_of = all_ccl(L);
        ccr_of = all_ccr(L);
        const CornerRanks ranks(g);
        for (int x = 0; x < L.size(); ++x) {
            const auto& v = ccl_of[static_cast<std::size_t>(x)].values;
            for (int k = 0; k < ranks.corner_count(); ++k)
                if (v[static_cast<std::size_t>(k)] < 0 || v[static_cast<std::size_t>(k)] >= ranks.route_count(k))
                    return "element " + std::to_string(x) + " has " + vector_text(v);
        }
        const auto& bottom = ccl_of[static_cast<std::size_t>(L.bottom())].values;
        if (std::any_of(bottom.begin(), bottom.end(), [](int v) { return v != 0; })) return "bottom is " + vector_text(bottom);
        for (int x = 0; x < L.size(); ++x)
            if (!componentwise_leq(ccl_of[static_cast<std::size_t>(x)], ccl_of[static_cast<std::size_t>(L.top())]))
                return "top is not componentwise maximal";
        return std::nullopt;
    });
    check(Property::cube_embedding, "each cover raises exactly one left coordinate", [&]() -> Failure {
        if (ccl_of.empty()) return "coordinates unavailable";
        for (const auto& cover : L.covers()) {
            const auto& a = ccl_of[static_cast<std::size_t>(cover.lower)].values;
            const auto& b = ccl_of[static_cast<std::size_t>(cover.upper)].values;
            int changed = 0, raised = 0;
            for (std::size_t k = 0; k < a.size(); ++k) changed += a[k] != b[k], raised += a[k] < b[k];
            if (changed != 1 || raised != 1) return vector_text(a) + " -> " + vector_text(b);
        }
        return std::nullopt;
    });
    check(Property::cube_embedding, "each cover changes exactly one right coordinate", [&]() -> Failure {
        if (ccr_of.empty()) return "coordinates unavailable";
        for (const auto& cover : L.covers()) {
            const auto& a = ccr_of[static_cast<std::size_t>(cover.lower)].values;
            const auto& b = ccr_of[static_cast<std::size_t>(cover.upper)].values;
            int changed = 0, raised = 0;
            for (std::size_t k = 0; k < a.size(); ++k) changed += a[k] != b[k], raised += a[k] < b[k];
            if (changed != 1) return vector_text(a) + " -> " + vector_text(b);
            ++(raised ? report.observed.ccr_increasing : report.observed.ccr_decreasing);
        }
        return std::nullopt;
    });

    // ---- comparison ---------------------------------------------------------
    std::vector<std::set<GeneralizedRoute>> clockwise_sets;
    for (int x = 0; x < L.size(); ++x) {
        const auto routes = catalog.routes_of(L.element(x));
        const auto lcb = left_clockwise_bricks(g, routes);
        clockwise_sets.emplace_back(lcb.begin(), lcb.end());
    }
    check(Property::comparison, "order = coordinates = left-clockwise inclusion = no witness", [&]() -> Failure {
        if (ccl_of.empty()) return "coordinates unavailable";
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b) {
                const bool order = L.leq(a, b);
                const bool coords = componentwise_leq(ccl_of[static_cast<std::size_t>(a)], ccl_of[static_cast<std::size_t>(b)]);
                const auto& sa = clockwise_sets[static_cast<std::size_t>(a)];
                const auto& sb = clockwise_sets[static_cast<std::size_t>(b)];
                const bool inclusion = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
                const auto witness = not_leq_witness(catalog, L.element(a), L.element(b));
                if (order != coords || order != inclusion || order == witness.has_value())
                    return "elements " + std::to_string(a) + ", " + std::to_string(b);
                if (witness && !is_clockwise_at(g, catalog.route(witness->other_route), catalog.route(witness->route),
                                                witness->vertex))
                    return "invalid witness for " + std::to_string(a) + ", " + std::to_string(b);
            }
        return std::nullopt;
    });
    check(Property::comparison, "left-clockwise bricks per corner count the coordinate and form an upper ideal",
          [&]() -> Failure {
              if (ccl_of.empty()) return "coordinates unavailable";
              for (int x = 0; x < L.size(); ++x) {
                  const auto routes = catalog.routes_of(L.element(x));
                  for (std::size_t k = 0; k < corners.size(); ++k) {
                      const auto& c = corners[k];
                      const auto at = left_clockwise_at(g, routes, c);
                      if (static_cast<int>(at.size()) != ccl_of[static_cast<std::size_t>(x)].values[k])
                          return "count differs at element " + std::to_string(x) + ", corner " + format_corner(g, c);
                      const auto upper = cornering_routes(g, routes, c).upper;
                      std::set<GeneralizedRoute> chosen(at.begin(), at.end());
                      for (const auto& b : bricks) {
                          if (b.left != c) continue;
                          if (chosen.count(b) != static_cast<std::size_t>(is_clockwise_at(g, b, upper, c.apex)))
                              return "not the bricks clockwise to the upper cornering route at " + format_corner(g, c);
                          if (!chosen.count(b)) continue;
                          for (const auto& other : bricks)
                              if (other.left == c && cmp_preorder(g, c.apex, Side::outgoing, other, b) > 0 &&
                                  !chosen.count(other))
                                  return "not an upper ideal at element " + std::to_string(x);
                      }
                  }
              }
              return std::nullopt;
          });
    for (int a = 0; a < L.size() && !report.observed.meet_intersection_witness; ++a)
        for (int b = a + 1; b < L.size(); ++b) {
            const auto& sa = clockwise_sets[static_cast<std::size_t>(a)];
            const auto& sb = clockwise_sets[static_cast<std::size_t>(b)];
            std::set<GeneralizedRoute> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(common, common.end()));
            if (common != clockwise_sets[static_cast<std::size_t>(L.meet(a, b))]) {
                report.observed.meet_intersection_witness = true;
                break;
            }
        }

    // ---- lattice theory -----------------------------------------------------
    check(Property::lattice_theory, "semidistributive", [&]() -> Failure {
        if (!check_semidistributive(L)) return "grouped check failed";
        if (L.size() <= options.triple_check_limit && !semidistributive_by_triples(L)) return "triple check failed";
        return std::nullopt;
    });
    // Each join-irreducible corresponds to the label of its unique lower cover.
    std::map<int, GeneralizedRoute> brick_of;
    for (int j : join_irreducibles(L))
        brick_of.emplace(j, L.covers()[static_cast<std::size_t>(L.lower_covers(j).front())].label);
    check(Property::lattice_theory, "join-irreducibles correspond to bricks", [&]() -> Failure {
        if (brick_of.size() != bricks.size())
            return std::to_string(brick_of.size()) + " join-irreducibles, " + std::to_string(bricks.size()) + " bricks";
        for (const auto& b : bricks) {
            const int j = L.index_of(reconstruct(catalog, BrickClique{{b}}));
            const auto it = brick_of.find(j);
            if (it == brick_of.end() || !(it->second == b)) return "brick " + format_route(g, b);
        }
        return std::nullopt;
    });
    check(Property::lattice_theory, "canonical join representations are the lower labels", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x) {
            std::vector<GeneralizedRoute> mapped;
            for (int j : canonical_join_representation(L, x)) mapped.push_back(brick_of.at(j));
            std::sort(mapped.begin(), mapped.end());
            if (mapped != down_bricks(L, x).bricks) return "element " + std::to_string(x);
        }
        return std::nullopt;
    });
    check(Property::lattice_theory, "pairs of join-irreducibles are canonical iff their bricks are coherent",
          [&]() -> Failure {
              for (const auto& [j1, b1] : brick_of)
                  for (const auto& [j2, b2] : brick_of) {
                      if (j1 >= j2) continue;
                      const auto cjr = canonical_join_representation(L, L.join(j1, j2));
                      const bool canonical = cjr == std::vector<int>{j1, j2};
                      if (canonical != coherent(g, b1, b2)) return format_route(g, b1) + " and " + format_route(g, b2);
                  }
              return std::nullopt;
          });

    // ---- duality and dynamics -----------------------------------------------
    check(Property::duality, "up-down reflection reverses the order", [&]() -> Failure {
        const FramedGraph ud = reflect_ud(g);
        const auto M = FramingLattice::build(ud, lattice_options);
        const auto map = element_map(L, M, [&](const GeneralizedRoute& r) { return transport_ud(ud, r); });
        if (!map) return "a clique does not survive the reflection";
        return check_anti_isomorphism(L, M, *map);
    });
    check(Property::duality, "left-right reflection reverses the order", [&]() -> Failure {
        const FramedGraph lr = reflect_lr(g);
        const auto M = FramingLattice::build(lr, lattice_options);
        const auto map = element_map(L, M, [&](const GeneralizedRoute& r) { return transport_lr(g, lr, r); });
        if (!map) return "a clique does not survive the reflection";
        return check_anti_isomorphism(L, M, *map);
    });
    check(Property::duality, "rowmotion is a bijection", [&]() -> Failure {
        std::vector<int> image(static_cast<std::size_t>(L.size()));
        for (int x = 0; x < L.size(); ++x) image[static_cast<std::size_t>(x)] = rowmotion(L, x);
        std::vector<bool> seen(image.size(), false);
        for (int y : image) {
            if (seen[static_cast<std::size_t>(y)]) return "element " + std::to_string(y) + " is hit twice";
            seen[static_cast<std::size_t>(y)] = true;
        }
        std::vector<bool> done(image.size(), false);
        for (int x = 0; x < L.size(); ++x) {
            if (done[static_cast<std::size_t>(x)]) continue;
            int length = 0;
            for (int y = x; !done[static_cast<std::size_t>(y)]; y = image[static_cast<std::size_t>(y)]) {
                done[static_cast<std::size_t>(y)] = true;
                ++length;
            }
            report.observed.rowmotion_orbits.push_back(length);
        }
        std::sort(report.observed.rowmotion_orbits.begin(), report.observed.rowmotion_orbits.end());
        return std::nullopt;
    });
    check(Property::duality, "second step and its dual agree on cliques but not per corner", [&]() -> Failure {
        for (int x = 0; x < L.size(); ++x) {
            const auto LT = sigma_L(catalog, L.element(x));
            if (!(psi_L_all(catalog, LT) == psi_L_dual_all(catalog, LT))) return "cliques differ at element " + std::to_string(x);
            for (const auto& seed : left_seeds(g)) {
                const bool same = psi_L(g, LT, seed) == psi_L_dual(g, LT, seed);
                if (std::holds_alternative<Corner>(seed)) {
                    if (same) return "routes agree at corner " + format_corner(g, std::get<Corner>(seed));
                } else {
                    ++report.observed.sink_seeds_total;
                    report.observed.sink_seeds_agreeing += same;
                }
            }
        }
        return std::nullopt;
    });
    return report;
}

}  // namespace latframe
