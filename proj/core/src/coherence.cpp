#include "latframe/coherence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace latframe {

namespace {

std::string label(const FramedGraph& g, Vertex v) { return std::to_string(g.external_label(v)); }

int index_in(const std::vector<Vertex>& verts, Vertex v) {
    auto it = std::find(verts.begin(), verts.end(), v);
    return it == verts.end() ? -1 : static_cast<int>(it - verts.begin());
}

std::optional<Letter> out_letter(const GeneralizedRoute& s, int i) {
    if (static_cast<std::size_t>(i) < s.edges.size()) return Letter{s.edges[static_cast<std::size_t>(i)]};
    if (s.right) return Letter{*s.right};
    return std::nullopt;
}

std::optional<Letter> in_letter(const GeneralizedRoute& s, int i) {
    if (i > 0) return Letter{s.edges[static_cast<std::size_t>(i) - 1]};
    if (s.left) return Letter{*s.left};
    return std::nullopt;
}

// Corners sit at odd keys between the even keys of their two edges.
int letter_key(const FramedGraph& g, Vertex v, Side side, const Letter& letter) {
    if (const auto* e = std::get_if<EdgeIndex>(&letter)) {
        const auto& edge = g.edge(*e);
        if (side == Side::incoming && edge.head == v) return 2 * g.in_position(*e);
        if (side == Side::outgoing && edge.tail == v) return 2 * g.out_position(*e);
        throw std::invalid_argument("edge '" + edge.id + "' is not " +
                                    (side == Side::incoming ? "incoming" : "outgoing") + " at vertex " + label(g, v));
    }
    const auto& c = std::get<Corner>(letter);
    if (c.side != side || c.apex != v)
        throw std::invalid_argument("corner " + format_corner(g, c) + " is not on that side of vertex " + label(g, v));
    return 2 * c.position + 1;
}

// Walks the two words from the given indices; `step` is +1 on the outgoing
// side and -1 on the incoming side.
std::strong_ordering compare_words(const FramedGraph& g, Side side, const GeneralizedRoute& s,
                                   const std::vector<Vertex>& sv, int i, const GeneralizedRoute& t, int j) {
    const int step = side == Side::outgoing ? 1 : -1;
    for (;;) {
        auto a = side == Side::outgoing ? out_letter(s, i) : in_letter(s, i);
        auto b = side == Side::outgoing ? out_letter(t, j) : in_letter(t, j);
        if (!a && !b) return std::strong_ordering::equal;
        if (!a || !b) throw std::logic_error("compared words where one is a proper prefix of the other");
        const Vertex w = sv[static_cast<std::size_t>(i)];
        const int ka = letter_key(g, w, side, *a);
        const int kb = letter_key(g, w, side, *b);
        if (ka != kb) return ka <=> kb;
        if (std::holds_alternative<Corner>(*a)) return std::strong_ordering::equal;
        i += step;
        j += step;
    }
}

struct Traced {
    const GeneralizedRoute& route;
    std::vector<Vertex> verts;
};

std::strong_ordering compare_at(const FramedGraph& g, Vertex v, Side side, const Traced& s, const Traced& t) {
    const int i = index_in(s.verts, v);
    const int j = index_in(t.verts, v);
    if (i < 0 || j < 0) throw std::invalid_argument("route does not pass through vertex " + label(g, v));
    return compare_words(g, side, s.route, s.verts, i, t.route, j);
}

bool clockwise_traced(const FramedGraph& g, const Traced& s, const Traced& t, Vertex v) {
    return compare_at(g, v, Side::incoming, s, t) < 0 && compare_at(g, v, Side::outgoing, s, t) > 0;
}

void require_corner(const FramedGraph& g, const Corner& c, Side side) {
    if (c.side != side || !g.corner_index(c))
        throw std::invalid_argument("not a " + std::string(side == Side::incoming ? "left" : "right") + " corner of the graph");
}

}  // namespace

GeneralizedRoute make_generalized_route(const FramedGraph& g, std::optional<Corner> left, std::vector<EdgeIndex> edges,
                                        std::optional<Corner> right) {
    for (auto e : edges)
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        if (g.edge(edges[k]).head != g.edge(edges[k + 1]).tail)
            throw std::invalid_argument("edges '" + g.edge(edges[k]).id + "' and '" + g.edge(edges[k + 1]).id +
                                        "' are not consecutive");
    GeneralizedRoute s;
    if (edges.empty()) {
        if (!left && !right) throw std::invalid_argument("an empty path needs a corner end");
        s.first_vertex = s.last_vertex = left ? left->apex : right->apex;
    } else {
        s.first_vertex = g.edge(edges.front()).tail;
        s.last_vertex = g.edge(edges.back()).head;
    }
    if (left) {
        require_corner(g, *left, Side::incoming);
        if (left->apex != s.first_vertex) throw std::invalid_argument("left corner apex is not the path start");
    } else if (!g.is_source(s.first_vertex)) {
        throw std::invalid_argument("path starts at vertex " + label(g, s.first_vertex) + ", which is not a source");
    }
    if (right) {
        require_corner(g, *right, Side::outgoing);
        if (right->apex != s.last_vertex) throw std::invalid_argument("right corner apex is not the path end");
    } else if (!g.is_sink(s.last_vertex)) {
        throw std::invalid_argument("path ends at vertex " + label(g, s.last_vertex) + ", which is not a sink");
    }
    s.left = left;
    s.edges = std::move(edges);
    s.right = right;
    return s;
}

GeneralizedRoute make_route(const FramedGraph& g, std::vector<EdgeIndex> edges) {
    return make_generalized_route(g, std::nullopt, std::move(edges), std::nullopt);
}

GeneralizedRoute make_brick(const FramedGraph& g, const Corner& left, std::vector<EdgeIndex> edges, const Corner& right) {
    return make_generalized_route(g, left, std::move(edges), right);
}

GeneralizedRoute make_left_cornered(const FramedGraph& g, const Corner& left, std::vector<EdgeIndex> edges) {
    return make_generalized_route(g, left, std::move(edges), std::nullopt);
}

RouteKind kind_of(const GeneralizedRoute& s) {
    if (s.is_brick()) return RouteKind::brick;
    if (s.is_left_cornered()) return RouteKind::left_cornered;
    if (s.is_right_cornered()) return RouteKind::right_cornered;
    return RouteKind::route;
}

std::vector<Vertex> path_vertices(const FramedGraph& g, const GeneralizedRoute& s) {
    std::vector<Vertex> verts;
    verts.reserve(s.edges.size() + 1);
    verts.push_back(s.first_vertex);
    for (auto e : s.edges) verts.push_back(g.edge(e).head);
    return verts;
}

bool passes_through(const FramedGraph& g, const GeneralizedRoute& s, Vertex v) {
    return index_in(path_vertices(g, s), v) >= 0;
}

std::optional<Letter> letter_at(const FramedGraph& g, const GeneralizedRoute& s, Vertex v, Side side) {
    const int i = index_in(path_vertices(g, s), v);
    if (i < 0) throw std::invalid_argument("route does not pass through vertex " + label(g, v));
    return side == Side::outgoing ? out_letter(s, i) : in_letter(s, i);
}

std::strong_ordering extended_letter_compare(const FramedGraph& g, Vertex v, Side side, const Letter& a, const Letter& b) {
    return letter_key(g, v, side, a) <=> letter_key(g, v, side, b);
}

std::strong_ordering cmp_preorder(const FramedGraph& g, Vertex v, Side side, const GeneralizedRoute& s,
                                  const GeneralizedRoute& t) {
    return compare_at(g, v, side, Traced{s, path_vertices(g, s)}, Traced{t, path_vertices(g, t)});
}

bool is_clockwise_at(const FramedGraph& g, const GeneralizedRoute& s, const GeneralizedRoute& t, Vertex v) {
    return clockwise_traced(g, Traced{s, path_vertices(g, s)}, Traced{t, path_vertices(g, t)}, v);
}

CoherenceVerdict coherence(const FramedGraph& g, const GeneralizedRoute& s, const GeneralizedRoute& t) {
    if (s.left && t.left && *s.left == *t.left) return SharedLeftCorner{*s.left};
    if (s.right && t.right && *s.right == *t.right) return SharedRightCorner{*s.right};
    const Traced ts{s, path_vertices(g, s)};
    const Traced tt{t, path_vertices(g, t)};
    for (Vertex v : ts.verts) {
        if (index_in(tt.verts, v) < 0) continue;
        if (clockwise_traced(g, ts, tt, v)) return FirstClockwiseAt{v};
        if (clockwise_traced(g, tt, ts, v)) return SecondClockwiseAt{v};
    }
    return Coherent{};
}

bool is_coherent(const CoherenceVerdict& verdict) { return std::holds_alternative<Coherent>(verdict); }

bool is_weakly_coherent(const CoherenceVerdict& verdict) {
    return std::holds_alternative<Coherent>(verdict) || std::holds_alternative<SharedLeftCorner>(verdict) ||
           std::holds_alternative<SharedRightCorner>(verdict);
}

std::vector<ConflictSubroute> conflict_subroutes(const FramedGraph& g, const GeneralizedRoute& p,
                                                 const GeneralizedRoute& q) {
    const Traced tp{p, path_vertices(g, p)};
    const Traced tq{q, path_vertices(g, q)};
    std::set<ConflictSubroute> found;
    for (Vertex v : tp.verts) {
        int i = index_in(tp.verts, v);
        int j = index_in(tq.verts, v);
        if (j < 0) continue;
        if (!clockwise_traced(g, tp, tq, v) && !clockwise_traced(g, tq, tp, v)) continue;
        int lo_i = i, lo_j = j;
        while (lo_i > 0 && lo_j > 0 && p.edges[static_cast<std::size_t>(lo_i) - 1] == q.edges[static_cast<std::size_t>(lo_j) - 1]) {
            --lo_i;
            --lo_j;
        }
        int hi_i = i, hi_j = j;
        while (static_cast<std::size_t>(hi_i) < p.edges.size() && static_cast<std::size_t>(hi_j) < q.edges.size() &&
               p.edges[static_cast<std::size_t>(hi_i)] == q.edges[static_cast<std::size_t>(hi_j)]) {
            ++hi_i;
            ++hi_j;
        }
        ConflictSubroute c;
        c.edges.assign(p.edges.begin() + lo_i, p.edges.begin() + hi_i);
        c.start = tp.verts[static_cast<std::size_t>(lo_i)];
        c.end = tp.verts[static_cast<std::size_t>(hi_i)];
        found.insert(std::move(c));
    }
    return {found.begin(), found.end()};
}

std::vector<GeneralizedRoute> enumerate_routes(const FramedGraph& g) {
    std::vector<GeneralizedRoute> out;
    std::vector<EdgeIndex> path;
    std::function<void(Vertex)> walk = [&](Vertex v) {
        if (g.is_sink(v)) {
            out.push_back(make_route(g, path));
            return;
        }
        for (auto e : g.out_order(v)) {
            path.push_back(e);
            walk(g.edge(e).head);
            path.pop_back();
        }
    };
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (g.is_source(v)) walk(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneralizedRoute> enumerate_bricks(const FramedGraph& g) {
    std::vector<GeneralizedRoute> out;
    std::vector<EdgeIndex> path;
    for (const auto& c : g.left_corners()) {
        std::function<void(Vertex)> walk = [&](Vertex v) {
            for (const auto& rc : g.right_corners())
                if (rc.apex == v) out.push_back(make_brick(g, c, path, rc));
            for (auto e : g.out_order(v)) {
                path.push_back(e);
                walk(g.edge(e).head);
                path.pop_back();
            }
        };
        walk(c.apex);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneralizedRoute> enumerate_left_cornered_routes(const FramedGraph& g) {
    std::vector<GeneralizedRoute> out;
    std::vector<EdgeIndex> path;
    for (const auto& c : g.left_corners()) {
        std::function<void(Vertex)> walk = [&](Vertex v) {
            if (g.is_sink(v)) {
                out.push_back(make_left_cornered(g, c, path));
                return;
            }
            for (auto e : g.out_order(v)) {
                path.push_back(e);
                walk(g.edge(e).head);
                path.pop_back();
            }
        };
        walk(c.apex);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneralizedRoute> enumerate_right_cornered_routes(const FramedGraph& g) {
    std::vector<GeneralizedRoute> out;
    std::vector<EdgeIndex> reversed;
    for (const auto& c : g.right_corners()) {
        std::function<void(Vertex)> walk = [&](Vertex v) {
            if (g.is_source(v)) {
                out.push_back(make_generalized_route(g, std::nullopt, {reversed.rbegin(), reversed.rend()}, c));
                return;
            }
            for (auto e : g.in_order(v)) {
                reversed.push_back(e);
                walk(g.edge(e).tail);
                reversed.pop_back();
            }
        };
        walk(c.apex);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_corner(const FramedGraph& g, const Corner& c) {
    const auto& lo = g.edge(c.lower).id;
    const auto& hi = g.edge(c.upper).id;
    if (c.is_left()) return "[" + label(g, c.apex) + ":" + lo + "|" + hi + ">";
    return "<" + lo + "|" + hi + ":" + label(g, c.apex) + "]";
}

std::string format_route(const FramedGraph& g, const GeneralizedRoute& s) {
    std::vector<std::string> parts;
    if (s.left) parts.push_back(format_corner(g, *s.left));
    if (!s.edges.empty()) {
        std::string path;
        for (auto e : s.edges) {
            if (!path.empty()) path += '-';
            path += g.edge(e).id;
        }
        parts.push_back(std::move(path));
    }
    if (s.right) parts.push_back(format_corner(g, *s.right));
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += "·";
        out += part;
    }
    return out;
}

namespace {

std::string normalize_dots(std::string_view text) {
    std::string out;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text.substr(k, 2) == "·") {
            out += '.';
            ++k;
        } else {
            out += text[k];
        }
    }
    return out;
}

EdgeIndex lookup_edge(const FramedGraph& g, const std::string& id) {
    auto e = g.find_edge(id);
    if (!e) throw std::invalid_argument("unknown edge '" + id + "'");
    return *e;
}

Corner parse_corner(const FramedGraph& g, const std::string& tok, Side side) {
    // [v:a|b>  or  <a|b:v]
    const bool left = side == Side::incoming;
    if (tok.size() < 7 || tok.front() != (left ? '[' : '<') || tok.back() != (left ? '>' : ']'))
        throw std::invalid_argument("malformed corner '" + tok + "'");
    const std::string body = tok.substr(1, tok.size() - 2);
    const auto colon = left ? body.find(':') : body.rfind(':');
    const auto bar = body.find('|');
    if (colon == std::string::npos || bar == std::string::npos) throw std::invalid_argument("malformed corner '" + tok + "'");
    std::string vtext, lo, hi;
    if (left) {
        vtext = body.substr(0, colon);
        lo = body.substr(colon + 1, bar - colon - 1);
        hi = body.substr(bar + 1);
    } else {
        lo = body.substr(0, bar);
        hi = body.substr(bar + 1, colon - bar - 1);
        vtext = body.substr(colon + 1);
    }
    int apex = 0;
    try {
        apex = std::stoi(vtext) - g.base() + 1;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex in corner '" + tok + "'");
    }
    if (apex < 1 || apex > g.vertex_count()) throw std::invalid_argument("vertex out of range in corner '" + tok + "'");
    const auto a = lookup_edge(g, lo);
    const auto b = lookup_edge(g, hi);
    auto c = g.corner_between(apex, side, a, b);
    if (!c || c->lower != a) throw std::invalid_argument("'" + tok + "' is not a corner of the graph");
    return *c;
}

}  // namespace

GeneralizedRoute parse_route(const FramedGraph& g, std::string_view text) {
    const std::string norm = normalize_dots(text);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : norm) {
        if (ch == '.') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.empty() || parts.size() > 3) throw std::invalid_argument("malformed route '" + std::string(text) + "'");

    std::optional<Corner> left;
    std::optional<Corner> right;
    std::size_t first = 0;
    std::size_t last = parts.size();
    if (!parts.front().empty() && parts.front().front() == '[') {
        left = parse_corner(g, parts.front(), Side::incoming);
        ++first;
    }
    if (last > first && !parts.back().empty() && parts.back().front() == '<') {
        right = parse_corner(g, parts.back(), Side::outgoing);
        --last;
    }
    if (last - first > 1) throw std::invalid_argument("malformed route '" + std::string(text) + "'");
    std::vector<EdgeIndex> edges;
    if (last - first == 1) {
        const std::string& path = parts[first];
        if (path.empty()) throw std::invalid_argument("empty path segment in '" + std::string(text) + "'");
        std::string id;
        for (std::size_t k = 0; k <= path.size(); ++k) {
            if (k == path.size() || path[k] == '-') {
                edges.push_back(lookup_edge(g, id));
                id.clear();
            } else {
                id += path[k];
            }
        }
    }
    return make_generalized_route(g, left, std::move(edges), right);
}

std::vector<GeneralizedRoute> parse_route_list(const FramedGraph& g, std::string_view text) {
    std::vector<GeneralizedRoute> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(parse_route(g, cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ';' || ch == ' ' || ch == '\t' || ch == '\n') flush();
        else cur += ch;
    }
    flush();
    return out;
}

}  // namespace latframe
