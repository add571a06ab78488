#include "latframe/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "latframe/coordinates.hpp"

namespace latframe {

std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    const bool wide = p.size() >= 10;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (wide && k) out += ' ';
        out += std::to_string(p[k]);
    }
    return out;
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) out.emplace_back(p[b], p[a]);
    std::sort(out.begin(), out.end());
    return out;
}

bool weak_leq(const Permutation& a, const Permutation& b) {
    const auto ia = inversions(a);
    const auto ib = inversions(b);
    return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

bool weak_covers(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        if (a[k] > a[k + 1]) continue;
        Permutation c = a;
        std::swap(c[k], c[k + 1]);
        if (c == b) return true;
    }
    return false;
}

namespace {

EdgeIndex step_edge(const FramedGraph& g, int step, bool up) {
    const auto e = g.find_edge((up ? "u" : "d") + std::to_string(step));
    if (!e) throw std::invalid_argument("graph is not an oruga graph");
    return *e;
}

Corner corner_at(const FramedGraph& g, Side side, int label) {
    for (const auto& c : g.corners(side))
        if (g.external_label(c.apex) == label) return c;
    throw std::invalid_argument("no corner at vertex " + std::to_string(label));
}

}  // namespace

GeneralizedRoute word_route(const FramedGraph& g, const std::vector<int>& word) {
    std::vector<EdgeIndex> edges;
    for (std::size_t k = 0; k < word.size(); ++k) edges.push_back(step_edge(g, static_cast<int>(k) + 1, word[k] == 1));
    return make_route(g, std::move(edges));
}

MaximalClique perm_to_clique(const RouteCatalog& catalog, const Permutation& p) {
    if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
    std::vector<int> word(p.size(), 0);
    std::vector<GeneralizedRoute> routes{word_route(catalog.graph(), word)};
    for (int position : p) {
        word[static_cast<std::size_t>(position - 1)] = 1;
        routes.push_back(word_route(catalog.graph(), word));
    }
    return catalog.clique_of(routes);
}

Permutation clique_to_perm(const RouteCatalog& catalog, const MaximalClique& clique) {
    const auto& g = catalog.graph();
    const int n = g.vertex_count() - 1;
    std::vector<std::vector<int>> words;
    for (const auto& r : catalog.routes_of(clique)) {
        std::vector<int> word;
        for (auto e : r.edges) word.push_back(g.edge(e).id[0] == 'u' ? 1 : 0);
        words.push_back(std::move(word));
    }
    const auto ones = [](const std::vector<int>& w) { return std::count(w.begin(), w.end(), 1); };
    std::sort(words.begin(), words.end(), [&](const auto& a, const auto& b) { return ones(a) < ones(b); });
    if (static_cast<int>(words.size()) != n + 1) throw InvariantError("clique does not have n+1 routes");
    Permutation p;
    for (int k = 1; k <= n; ++k) {
        const auto& before = words[static_cast<std::size_t>(k - 1)];
        const auto& after = words[static_cast<std::size_t>(k)];
        int added = 0;
        for (std::size_t i = 0; i < before.size(); ++i) {
            if (before[i] > after[i] || ones(after) != k) throw InvariantError("clique words are not nested");
            if (before[i] < after[i]) added = static_cast<int>(i) + 1;
        }
        p.push_back(added);
    }
    return p;
}

std::vector<Arc> all_arcs(int n) {
    std::vector<Arc> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int inner = j - i - 1;
            for (int mask = 0; mask < (1 << inner); ++mask) {
                Arc a{i, j, {}};
                for (int k = 0; k < inner; ++k) a.above.push_back(((mask >> (inner - 1 - k)) & 1) != 0);
                out.push_back(std::move(a));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

GeneralizedRoute arc_to_brick(const FramedGraph& g, const Arc& arc) {
    if (arc.start >= arc.end || static_cast<int>(arc.above.size()) != arc.end - arc.start - 1)
        throw std::invalid_argument("malformed arc");
    std::vector<EdgeIndex> edges;
    for (int k = arc.start + 1; k < arc.end; ++k)
        edges.push_back(step_edge(g, k, arc.above[static_cast<std::size_t>(k - arc.start - 1)]));
    return make_brick(g, corner_at(g, Side::incoming, arc.start), std::move(edges),
                      corner_at(g, Side::outgoing, arc.end - 1));
}

Arc brick_to_arc(const FramedGraph& g, const GeneralizedRoute& brick) {
    if (!brick.is_brick()) throw std::invalid_argument("not a brick");
    Arc a{g.external_label(brick.left->apex), g.external_label(brick.right->apex) + 1, {}};
    for (auto e : brick.edges) a.above.push_back(g.edge(e).id[0] == 'u');
    return a;
}

namespace {

// Height of an arc above the axis at integer x: 0 at its ends, +1 or -1 at
// the points it passes over or under.
int height(const Arc& a, int x) {
    if (x == a.start || x == a.end) return 0;
    return a.above[static_cast<std::size_t>(x - a.start - 1)] ? 1 : -1;
}

}  // namespace

bool arcs_compatible(const Arc& a, const Arc& b) {
    if (a.start == b.start || a.end == b.end) return false;
    const int lo = std::max(a.start, b.start);
    const int hi = std::min(a.end, b.end);
    bool a_over = false;
    bool b_over = false;
    for (int x = lo; x <= hi; ++x) {
        const int d = height(a, x) - height(b, x);
        if (height(a, x) == height(b, x)) continue;
        (d > 0 ? a_over : b_over) = true;
    }
    return !(a_over && b_over);
}

std::string format_arc(const Arc& arc) {
    std::string out = "(" + std::to_string(arc.start) + "," + std::to_string(arc.end);
    if (!arc.above.empty()) {
        out += ",";
        for (bool up : arc.above) out += up ? '+' : '-';
    }
    return out + ")";
}

int ccl_weak_formula(const Permutation& p, int i) {
    const int n = static_cast<int>(p.size());
    int sum = 0;
    for (const auto& [a, b] : inversions(p))
        if (a == i) sum += 1 << (n - b);
    return sum;
}

std::vector<int> lehmer_code(const Permutation& p) {
    std::vector<int> out(p.size(), 0);
    for (const auto& inversion : inversions(p)) ++out[static_cast<std::size_t>(inversion.first - 1)];
    return out;
}

std::optional<std::pair<Permutation, Permutation>> lehmer_counterexample(int n) {
    const auto perms = all_permutations(n);
    for (const auto& a : perms) {
        const auto la = lehmer_code(a);
        for (const auto& b : perms) {
            if (a == b) continue;
            const auto lb = lehmer_code(b);
            bool below = true;
            for (std::size_t k = 0; k < la.size(); ++k) below = below && la[k] <= lb[k];
            if (below && !weak_leq(a, b) && !weak_leq(b, a)) return std::pair{a, b};
        }
    }
    return std::nullopt;
}

bool lehmer_covers_change_one_entry(int n) {
    const auto perms = all_permutations(n);
    for (const auto& a : perms)
        for (const auto& b : perms) {
            if (!weak_covers(a, b)) continue;
            const auto la = lehmer_code(a);
            const auto lb = lehmer_code(b);
            int changed = 0, raised = 0;
            for (std::size_t k = 0; k < la.size(); ++k) changed += la[k] != lb[k], raised += la[k] < lb[k];
            if (changed != 1 || raised != 1) return false;
        }
    return true;
}

std::vector<BinaryTree> all_binary_trees(int n) {
    // Each subtree is built over a contiguous range of in-order labels.
    std::function<std::vector<BinaryTree>(int, int)> build = [&](int lo, int hi) {
        std::vector<BinaryTree> out;
        if (lo > hi) {
            BinaryTree empty;
            empty.left.assign(static_cast<std::size_t>(n) + 1, 0);
            empty.right.assign(static_cast<std::size_t>(n) + 1, 0);
            out.push_back(std::move(empty));
            return out;
        }
        for (int r = lo; r <= hi; ++r) {
            const auto lefts = build(lo, r - 1);
            const auto rights = build(r + 1, hi);
            for (const auto& l : lefts)
                for (const auto& rt : rights) {
                    BinaryTree t;
                    t.root = r;
                    t.left.resize(static_cast<std::size_t>(n) + 1);
                    t.right.resize(static_cast<std::size_t>(n) + 1);
                    for (std::size_t k = 0; k < t.left.size(); ++k) {
                        t.left[k] = l.left[k] | rt.left[k];
                        t.right[k] = l.right[k] | rt.right[k];
                    }
                    t.left[static_cast<std::size_t>(r)] = l.root;
                    t.right[static_cast<std::size_t>(r)] = rt.root;
                    out.push_back(std::move(t));
                }
        }
        return out;
    };
    auto out = build(1, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BinaryTree> right_rotations(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    const int n = static_cast<int>(t.left.size()) - 1;
    std::vector<int> parent(t.left.size(), 0);
    for (int v = 1; v <= n; ++v) {
        if (t.left[static_cast<std::size_t>(v)]) parent[static_cast<std::size_t>(t.left[static_cast<std::size_t>(v)])] = v;
        if (t.right[static_cast<std::size_t>(v)]) parent[static_cast<std::size_t>(t.right[static_cast<std::size_t>(v)])] = v;
    }
    for (int y = 1; y <= n; ++y) {
        const int x = t.left[static_cast<std::size_t>(y)];
        if (!x) continue;
        BinaryTree r = t;
        const auto ux = static_cast<std::size_t>(x);
        const auto uy = static_cast<std::size_t>(y);
        r.left[uy] = t.right[ux];
        r.right[ux] = y;
        const int p = parent[uy];
        if (!p) r.root = x;
        else if (t.left[static_cast<std::size_t>(p)] == y) r.left[static_cast<std::size_t>(p)] = x;
        else r.right[static_cast<std::size_t>(p)] = x;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<int> bracket_vector(const BinaryTree& t) {
    const int n = static_cast<int>(t.left.size()) - 1;
    std::function<int(int)> size = [&](int v) -> int {
        if (!v) return 0;
        return 1 + size(t.left[static_cast<std::size_t>(v)]) + size(t.right[static_cast<std::size_t>(v)]);
    };
    std::vector<int> out;
    for (int v = 1; v < n; ++v) out.push_back(size(t.right[static_cast<std::size_t>(v)]));
    return out;
}

TamariReport tamari_check(int n) {
    TamariReport report;
    const auto L = FramingLattice::build(caracol(n));
    const auto coords = all_ccl(L);
    const auto trees = all_binary_trees(n);
    report.elements = L.size();
    report.catalan = static_cast<int>(trees.size());

    std::set<std::vector<int>> ccl_set;
    for (const auto& c : coords) ccl_set.insert(c.values);
    report.coordinates_distinct = static_cast<int>(ccl_set.size()) == L.size();

    report.covers_change_one_coordinate = true;
    for (const auto& cover : L.covers()) {
        const auto& a = coords[static_cast<std::size_t>(cover.lower)].values;
        const auto& b = coords[static_cast<std::size_t>(cover.upper)].values;
        int changed = 0;
        bool up = true;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) ++changed, up = up && a[k] < b[k];
        if (changed != 1 || !up) report.covers_change_one_coordinate = false;
    }

    report.coordinate_order_matches = true;
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
            if (L.leq(a, b) != componentwise_leq(coords[static_cast<std::size_t>(a)], coords[static_cast<std::size_t>(b)]))
                report.coordinate_order_matches = false;

    // Find the entry-to-corner matching under which the vector sets agree.
    const int width = n - 1;
    std::vector<int> sigma(static_cast<std::size_t>(width));
    std::iota(sigma.begin(), sigma.end(), 0);
    const auto permuted = [&](const std::vector<int>& bracket) {
        std::vector<int> v(bracket.size());
        for (std::size_t i = 0; i < bracket.size(); ++i) v[static_cast<std::size_t>(sigma[i])] = bracket[i];
        return v;
    };
    do {
        std::set<std::vector<int>> mapped;
        for (const auto& t : trees) mapped.insert(permuted(bracket_vector(t)));
        if (mapped == ccl_set) {
            report.vector_sets_equal = true;
            report.corner_for_entry = sigma;
            break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (!report.vector_sets_equal) {
        report.failure = "no corner matching makes the bracket vectors equal to the coordinates";
        return report;
    }

    std::map<std::vector<int>, int> element_of;
    for (int x = 0; x < L.size(); ++x) element_of[coords[static_cast<std::size_t>(x)].values] = x;
    std::set<std::pair<int, int>> tree_covers;
    for (const auto& t : trees)
        for (const auto& r : right_rotations(t))
            tree_covers.emplace(element_of.at(permuted(bracket_vector(t))), element_of.at(permuted(bracket_vector(r))));
    std::set<std::pair<int, int>> lattice_covers;
    for (const auto& cover : L.covers()) lattice_covers.emplace(cover.lower, cover.upper);
    report.hasse_isomorphic = tree_covers == lattice_covers;
    if (!report.hasse_isomorphic) report.failure = "rotation covers differ from the lattice covers";
    if (report.elements != report.catalan) report.failure = "element count is not the Catalan number";
    return report;
}

}  // namespace latframe
