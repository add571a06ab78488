#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "latframe/classical.hpp"
#include "latframe/coordinates.hpp"
#include "latframe/corpus.hpp"
#include "latframe/invariants.hpp"
#include "latframe/reconstruction.hpp"

namespace latframe::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, dot };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    Format format = Format::text;
    std::size_t route_limit = kDefaultRouteLimit;
};

FramedGraph load_input(const std::string& input) {
    if (is_builtin_spec(input)) {
        try {
            return builtin_graph(input);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return load_framed_graph(input);
}

FramingLattice load_lattice(const Config& config) {
    LatticeOptions options;
    options.route_limit = config.route_limit;
    return FramingLattice::build(load_input(config.input), options);
}

std::string clique_text(const RouteCatalog& catalog, const MaximalClique& c) {
    std::string out;
    for (std::size_t k = 0; k < c.routes.size(); ++k) {
        if (k) out += ", ";
        out += format_route(catalog.graph(), catalog.route(c.routes[k]));
    }
    return "{" + out + "}";
}

json route_list_json(const FramedGraph& g, const std::vector<GeneralizedRoute>& routes) {
    json out = json::array();
    for (const auto& r : routes) out.push_back(format_route(g, r));
    return out;
}

std::string route_list_text(const FramedGraph& g, const std::vector<GeneralizedRoute>& routes) {
    std::string out;
    for (std::size_t k = 0; k < routes.size(); ++k) {
        if (k) out += ", ";
        out += format_route(g, routes[k]);
    }
    return "{" + out + "}";
}

std::string vector_text(const std::vector<int>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return "(" + out + ")";
}

/// An element given as a lattice index or as a list of routes.
int resolve_element(const FramingLattice& L, const std::string& ref) {
    const bool numeric = !ref.empty() && std::all_of(ref.begin(), ref.end(), [](unsigned char ch) { return std::isdigit(ch); });
    if (numeric) {
        const long long x = std::stoll(ref);
        if (x >= L.size()) throw UsageError("element " + ref + " out of range (lattice has " + std::to_string(L.size()) + ")");
        return static_cast<int>(x);
    }
    try {
        const auto routes = parse_route_list(L.graph(), ref);
        for (const auto& r : routes)
            if (!r.is_plain()) throw UsageError("'" + format_route(L.graph(), r) + "' is not a route");
        const auto found = L.find(L.catalog().clique_of(routes));
        if (!found) throw UsageError("routes '" + ref + "' do not form a maximal clique");
        return *found;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid element reference: ") + e.what());
    }
}

void require_format(const Config& config, std::initializer_list<Format> allowed, const char* command) {
    if (std::find(allowed.begin(), allowed.end(), config.format) == allowed.end())
        throw UsageError(std::string("this output format is not available for '") + command + "'");
}

int cmd_show(const Config& config, std::ostream& out) {
    require_format(config, {Format::text}, "show");
    out << serialize(load_input(config.input));
    return ok;
}

int cmd_routes(const Config& config, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "routes");
    const RouteCatalog catalog(load_input(config.input), config.route_limit);
    const auto& g = catalog.graph();
    if (config.format == Format::json) {
        out << json{{"count", catalog.size()}, {"routes", route_list_json(g, catalog.routes())}}.dump(2) << "\n";
        return ok;
    }
    for (int r = 0; r < catalog.size(); ++r) out << std::setw(4) << r << "  " << format_route(g, catalog.route(r)) << "\n";
    return ok;
}

int cmd_cliques(const Config& config, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "cliques");
    const auto L = load_lattice(config);
    if (config.format == Format::json) {
        json elements = json::array();
        for (const auto& e : L.elements()) elements.push_back(route_list_json(L.graph(), L.catalog().routes_of(e)));
        out << json{{"clique_size", L.graph().clique_size()}, {"count", L.size()}, {"cliques", elements}}.dump(2) << "\n";
        return ok;
    }
    for (int x = 0; x < L.size(); ++x) out << std::setw(4) << x << "  " << clique_text(L.catalog(), L.element(x)) << "\n";
    return ok;
}

json lattice_json(const FramingLattice& L) {
    const auto coords = all_ccl(L);
    json elements = json::array();
    for (int x = 0; x < L.size(); ++x)
        elements.push_back({{"index", x},
                            {"routes", route_list_json(L.graph(), L.catalog().routes_of(L.element(x)))},
                            {"ccl", coords[static_cast<std::size_t>(x)].values}});
    json covers = json::array();
    for (const auto& c : L.covers())
        covers.push_back({{"lower", c.lower}, {"upper", c.upper}, {"label", format_route(L.graph(), c.label)}});
    return {{"elements", elements}, {"covers", covers}, {"bottom", L.bottom()}, {"top", L.top()}};
}

std::string dot_of(const FramingLattice& L) {
    std::vector<std::vector<int>> coords;
    for (auto& c : all_ccl(L)) coords.push_back(std::move(c.values));
    return to_dot(L, coords);
}

int cmd_lattice(const Config& config, std::ostream& out) {
    const auto L = load_lattice(config);
    if (config.format == Format::json) {
        out << lattice_json(L).dump(2) << "\n";
        return ok;
    }
    if (config.format == Format::dot) {
        out << dot_of(L);
        return ok;
    }
    const auto coords = all_ccl(L);
    out << L.size() << " elements, " << L.covers().size() << " covers, bottom " << L.bottom() << ", top " << L.top() << "\n";
    for (int x = 0; x < L.size(); ++x)
        out << std::setw(4) << x << "  ccl " << vector_text(coords[static_cast<std::size_t>(x)].values) << "  "
            << clique_text(L.catalog(), L.element(x)) << "\n";
    out << "covers:\n";
    for (const auto& c : L.covers())
        out << std::setw(4) << c.lower << " -> " << std::setw(4) << c.upper << "  " << format_route(L.graph(), c.label) << "\n";
    return ok;
}

int cmd_bricks(const Config& config, const std::string& element, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "bricks");
    if (element.empty()) {
        const auto g = load_input(config.input);
        const auto bricks = enumerate_bricks(g);
        if (config.format == Format::json) {
            out << json{{"count", bricks.size()}, {"bricks", route_list_json(g, bricks)}}.dump(2) << "\n";
            return ok;
        }
        for (std::size_t k = 0; k < bricks.size(); ++k) out << std::setw(4) << k << "  " << format_route(g, bricks[k]) << "\n";
        return ok;
    }
    const auto L = load_lattice(config);
    const auto& g = L.graph();
    const int x = resolve_element(L, element);
    const auto down = down_bricks(L, x).bricks;
    const auto up = up_bricks(L, x).bricks;
    const auto clockwise = left_clockwise_bricks(g, L.catalog().routes_of(L.element(x)));
    if (config.format == Format::json) {
        out << json{{"element", x},
                    {"down_bricks", route_list_json(g, down)},
                    {"up_bricks", route_list_json(g, up)},
                    {"left_clockwise", route_list_json(g, clockwise)},
                    {"canonical_join_representation", canonical_join_representation(L, x)}}
                   .dump(2)
            << "\n";
        return ok;
    }
    out << "element " << x << " " << clique_text(L.catalog(), L.element(x)) << "\n";
    out << "down bricks:    " << route_list_text(g, down) << "\n";
    out << "up bricks:      " << route_list_text(g, up) << "\n";
    out << "left-clockwise: " << route_list_text(g, clockwise) << "\n";
    return ok;
}

int cmd_reconstruct(const Config& config, const std::string& bricks_text, bool dual, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "reconstruct");
    const auto L = load_lattice(config);
    const auto& g = L.graph();
    BrickClique T;
    try {
        T = make_brick_clique(g, parse_route_list(g, bricks_text));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid brick clique: ") + e.what());
    }
    if (dual) {
        const int x = L.index_of(up_reconstruct(L.catalog(), T));
        if (config.format == Format::json) {
            out << json{{"element", x}, {"routes", route_list_json(g, L.catalog().routes_of(L.element(x)))}}.dump(2) << "\n";
        } else {
            out << "element " << x << " " << clique_text(L.catalog(), L.element(x)) << "\n";
        }
        return ok;
    }
    const auto LT = phi_L_all(g, T);
    const auto routes = psi_L_routes(g, LT);
    const int x = L.index_of(L.catalog().clique_of(routes));
    if (config.format == Format::json) {
        json stage1 = json::array();
        const auto corners = g.left_corners();
        for (std::size_t k = 0; k < corners.size(); ++k)
            stage1.push_back({{"corner", format_corner(g, corners[k])}, {"route", format_route(g, LT.routes[k])}});
        out << json{{"bricks", route_list_json(g, T.bricks)},
                    {"stage1", stage1},
                    {"stage2", route_list_json(g, routes)},
                    {"element", x}}
                   .dump(2)
            << "\n";
        return ok;
    }
    out << "stage 1 (left-cornered clique):\n";
    for (const auto& r : LT.routes) out << "  " << format_route(g, r) << "\n";
    out << "stage 2 (maximal clique, element " << x << "):\n";
    const auto seeds = left_seeds(g);
    for (std::size_t k = 0; k < routes.size(); ++k) {
        const auto& seed = seeds[k];
        const std::string from = std::holds_alternative<Corner>(seed) ? format_corner(g, std::get<Corner>(seed))
                                                                      : g.edge(std::get<EdgeIndex>(seed)).id;
        out << "  " << std::left << std::setw(14) << from << std::right << " " << format_route(g, routes[k]) << "\n";
    }
    return ok;
}

int cmd_coords(const Config& config, bool right, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "coords");
    const auto L = load_lattice(config);
    const auto coords = right ? all_ccr(L) : all_ccl(L);
    std::vector<std::string> corner_names;
    for (const auto& c : L.graph().corners(right ? Side::outgoing : Side::incoming))
        corner_names.push_back(format_corner(L.graph(), c));
    if (config.format == Format::json) {
        json rows = json::array();
        for (int x = 0; x < L.size(); ++x) rows.push_back({{"element", x}, {"values", coords[static_cast<std::size_t>(x)].values}});
        out << json{{"side", right ? "right" : "left"}, {"corners", corner_names}, {"coordinates", rows}}.dump(2) << "\n";
        return ok;
    }
    out << "corners:";
    for (const auto& name : corner_names) out << " " << name;
    out << "\n";
    for (int x = 0; x < L.size(); ++x) out << std::setw(4) << x << "  " << vector_text(coords[static_cast<std::size_t>(x)].values) << "\n";
    return ok;
}

int cmd_compare(const Config& config, const std::string& a_ref, const std::string& b_ref, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "compare");
    const auto L = load_lattice(config);
    const int a = resolve_element(L, a_ref);
    const int b = resolve_element(L, b_ref);
    const auto& catalog = L.catalog();
    const auto witness = not_leq_witness(catalog, L.element(a), L.element(b));
    const auto ca = ccl(catalog, L.element(a)).values;
    const auto cb = ccl(catalog, L.element(b)).values;
    const bool leq = !witness;
    if (config.format == Format::json) {
        json j{{"a", a}, {"b", b}, {"leq", leq}, {"ccl_a", ca}, {"ccl_b", cb}};
        if (witness)
            j["witness"] = {{"route", format_route(L.graph(), catalog.route(witness->route))},
                            {"clockwise_route", format_route(L.graph(), catalog.route(witness->other_route))},
                            {"vertex", L.graph().external_label(witness->vertex)}};
        out << j.dump(2) << "\n";
        return ok;
    }
    out << a << (leq ? " <= " : " is not <= ") << b << "\n";
    out << "ccl(" << a << ") = " << vector_text(ca) << "\nccl(" << b << ") = " << vector_text(cb) << "\n";
    if (witness)
        out << "witness: " << format_route(L.graph(), catalog.route(witness->other_route)) << " is clockwise to "
            << format_route(L.graph(), catalog.route(witness->route)) << " at vertex "
            << L.graph().external_label(witness->vertex) << "\n";
    return ok;
}

int cmd_check(const Config& config, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "check");
    SuiteOptions options;
    options.route_limit = config.route_limit;
    const auto report = run_invariants(load_input(config.input), options, config.input);
    if (config.format == Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"property", property_name(c.property)}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << json{{"graph", report.graph},
                    {"passed", report.passed()},
                    {"elements", report.observed.elements},
                    {"covers", report.observed.covers},
                    {"bricks", report.observed.bricks},
                    {"rowmotion_orbits", report.observed.rowmotion_orbits},
                    {"checks", checks}}
                   .dump(2)
            << "\n";
    } else {
        out << report.graph << ": " << report.observed.elements << " elements, " << report.observed.covers << " covers, "
            << report.observed.bricks << " bricks\n";
        for (const auto& c : report.checks)
            out << (c.passed ? "  ok    " : "  FAIL  ") << "[" << property_name(c.property) << "] " << c.name << "\n";
        if (const auto* failure = report.first_failure()) out << "first counterexample: " << failure->detail << "\n";
    }
    return report.passed() ? ok : invariant_failure;
}

int cmd_export_dot(const Config& config, const std::string& path, std::ostream& out) {
    const auto L = load_lattice(config);
    const auto text = dot_of(L);
    if (path.empty() || path == "-") {
        out << text;
        return ok;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
    return ok;
}

int cmd_weak_order(const Config& config, int n, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "weak-order");
    if (n < 1 || n > 6) throw UsageError("weak-order needs 1 <= n <= 6");
    const auto L = FramingLattice::build(oruga(n));
    const auto& g = L.graph();
    json rows = json::array();
    for (const auto& p : all_permutations(n)) {
        const int x = L.index_of(perm_to_clique(L.catalog(), p));
        std::vector<std::string> arcs;
        for (const auto& b : down_bricks(L, x).bricks) arcs.push_back(format_arc(brick_to_arc(g, b)));
        const auto coords = ccl(L.catalog(), L.element(x)).values;
        if (config.format == Format::json) {
            rows.push_back({{"permutation", format_permutation(p)}, {"element", x}, {"arcs", arcs}, {"ccl", coords}});
            continue;
        }
        std::string diagram;
        for (const auto& a : arcs) diagram += (diagram.empty() ? "" : " ") + a;
        out << std::left << std::setw(n + 2) << format_permutation(p) << std::right << std::setw(4) << x << "  "
            << std::left << std::setw(14) << vector_text(coords) << std::right << diagram << "\n";
    }
    if (config.format == Format::json) out << rows.dump(2) << "\n";
    return ok;
}

int cmd_tamari(const Config& config, int n, std::ostream& out) {
    require_format(config, {Format::text, Format::json}, "tamari");
    if (n < 2 || n > 5) throw UsageError("tamari needs 2 <= n <= 5");
    const auto r = tamari_check(n);
    if (config.format == Format::json) {
        out << json{{"n", n},
                    {"elements", r.elements},
                    {"catalan", r.catalan},
                    {"coordinates_distinct", r.coordinates_distinct},
                    {"covers_change_one_coordinate", r.covers_change_one_coordinate},
                    {"coordinate_order_matches", r.coordinate_order_matches},
                    {"vector_sets_equal", r.vector_sets_equal},
                    {"hasse_isomorphic", r.hasse_isomorphic},
                    {"corner_for_entry", r.corner_for_entry},
                    {"passed", r.passed()}}
                   .dump(2)
            << "\n";
    } else {
        out << "caracol(" << n << "): " << r.elements << " elements, Catalan " << r.catalan << "\n";
        out << "  coordinates distinct:          " << (r.coordinates_distinct ? "yes" : "no") << "\n";
        out << "  covers change one coordinate:  " << (r.covers_change_one_coordinate ? "yes" : "no") << "\n";
        out << "  componentwise = lattice order: " << (r.coordinate_order_matches ? "yes" : "no") << "\n";
        out << "  bracket vectors = coordinates: " << (r.vector_sets_equal ? "yes" : "no") << "\n";
        out << "  rotation covers = lattice:     " << (r.hasse_isomorphic ? "yes" : "no") << "\n";
        if (!r.failure.empty()) out << "  " << r.failure << "\n";
    }
    return r.passed() ? ok : invariant_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Framing lattices of framed DAGs: routes, cliques, bricks, reconstruction and coordinates."};
    app.name("latframe");
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--route-limit", config.route_limit, "Refuse graphs with more routes than this")
        ->check(CLI::PositiveNumber);

    const auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "Framed-graph file or oruga:N, caracol:N, random:SEED,V,E")->required();
        return sub;
    };

    std::string element, other, bricks, dot_path;
    bool right = false;
    bool dual = false;
    int n = 0;

    auto* show = with_input(app.add_subcommand("show", "Print the graph in the framed-graph file format"));
    auto* routes = with_input(app.add_subcommand("routes", "List all routes"));
    auto* cliques = with_input(app.add_subcommand("cliques", "List the maximal cliques"));
    auto* lattice = with_input(app.add_subcommand("lattice", "Elements, covers and cover labels"));
    auto* bricks_cmd = with_input(app.add_subcommand("bricks", "List bricks, or the labels around one element"));
    bricks_cmd->add_option("element", element, "Element index or route list");
    auto* reconstruct = with_input(app.add_subcommand("reconstruct", "Rebuild the clique whose lower labels are a brick clique"));
    reconstruct->add_option("--bricks", bricks, "Bricks separated by commas; empty for the bottom")->required();
    reconstruct->add_flag("--dual", dual, "Use the brick clique as upper labels instead");
    auto* coords = with_input(app.add_subcommand("coords", "Cubical coordinates of every element"));
    coords->add_flag("--right", right, "Right coordinates instead of left ones");
    auto* compare = with_input(app.add_subcommand("compare", "Compare two elements"));
    compare->add_option("a", element, "First element")->required();
    compare->add_option("b", other, "Second element")->required();
    auto* check = with_input(app.add_subcommand("check", "Run the invariant suite"));
    auto* export_dot = with_input(app.add_subcommand("export-dot", "Write the labeled Hasse diagram as Graphviz"));
    export_dot->add_option("-o,--output", dot_path, "Output file (default: standard output)");
    auto* weak = app.add_subcommand("weak-order", "Permutations, arc diagrams and coordinates on oruga(n)");
    weak->add_option("n", n, "Size")->required();
    auto* tamari = app.add_subcommand("tamari", "Compare caracol(n) with the Tamari lattice");
    tamari->add_option("n", n, "Size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    config.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;

    try {
        if (*show) return cmd_show(config, out);
        if (*routes) return cmd_routes(config, out);
        if (*cliques) return cmd_cliques(config, out);
        if (*lattice) return cmd_lattice(config, out);
        if (*bricks_cmd) return cmd_bricks(config, element, out);
        if (*reconstruct) return cmd_reconstruct(config, bricks, dual, out);
        if (*coords) return cmd_coords(config, right, out);
        if (*compare) return cmd_compare(config, element, other, out);
        if (*check) return cmd_check(config, out);
        if (*export_dot) return cmd_export_dot(config, dot_path, out);
        if (*weak) return cmd_weak_order(config, n, out);
        if (*tamari) return cmd_tamari(config, n, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return bad_input;
    } catch (const ValidationError& e) {
        err << "invalid graph: " << e.what() << "\n";
        return bad_input;
    } catch (const LimitError& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return limit_exceeded;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return invariant_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    return usage;
}

}  // namespace latframe::cli
