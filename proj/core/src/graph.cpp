#include "latframe/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace latframe {

namespace {

bool valid_token(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char ch) {
        return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
    });
}

std::string describe_order(const FramedGraph& g, std::span<const EdgeIndex> order) {
    std::string out;
    for (auto e : order) {
        if (!out.empty()) out += ' ';
        out += g.edge(e).id;
    }
    return out;
}

}  // namespace

std::size_t FramedGraph::idx(Vertex v) const {
    if (v < 1 || v > vertex_count_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

FramedGraph FramedGraph::create(int vertex_count, int base, std::vector<Edge> edges,
                                std::vector<std::vector<EdgeIndex>> in_orders,
                                std::vector<std::vector<EdgeIndex>> out_orders) {
    if (vertex_count < 1) throw ValidationError("vertex count must be positive");
    if (base != 0 && base != 1) throw ValidationError("vertex base must be 0 or 1");

    FramedGraph g;
    g.vertex_count_ = vertex_count;
    g.base_ = base;
    g.edges_ = std::move(edges);

    const auto slots = static_cast<std::size_t>(vertex_count) + 1;
    g.in_.assign(slots, {});
    g.out_.assign(slots, {});

    std::unordered_set<std::string> ids;
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
        const auto& edge = g.edges_[e];
        if (!valid_token(edge.id)) throw ValidationError("invalid edge id '" + edge.id + "'");
        if (!ids.insert(edge.id).second) throw ValidationError("duplicate edge id '" + edge.id + "'");
        if (edge.tail < 1 || edge.tail > vertex_count || edge.head < 1 || edge.head > vertex_count)
            throw ValidationError("edge '" + edge.id + "' has an endpoint outside the vertex range");
        if (edge.tail >= edge.head)
            throw ValidationError("edge '" + edge.id + "' does not go from a smaller to a larger vertex (cycle)");
        g.out_[static_cast<std::size_t>(edge.tail)].push_back(static_cast<EdgeIndex>(e));
        g.in_[static_cast<std::size_t>(edge.head)].push_back(static_cast<EdgeIndex>(e));
    }

    in_orders.resize(slots);
    out_orders.resize(slots);
    for (Vertex v = 1; v <= vertex_count; ++v) {
        const auto sv = static_cast<std::size_t>(v);
        if (g.in_[sv].empty() && g.out_[sv].empty())
            throw ValidationError("vertex " + std::to_string(g.external_label(v)) + " is isolated");
        const bool internal = !g.in_[sv].empty() && !g.out_[sv].empty();
        auto apply = [&](std::vector<EdgeIndex>& declared, const std::vector<EdgeIndex>& given, const char* side) {
            if (given.empty()) return;
            if (!internal)
                throw ValidationError(std::string(side) + " framing given for vertex " +
                                      std::to_string(g.external_label(v)) + ", which is not internal");
            auto a = declared;
            auto b = given;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                throw ValidationError(std::string(side) + " framing at vertex " + std::to_string(g.external_label(v)) +
                                      " is not a permutation of its " + side + " edges");
            declared = given;
        };
        apply(g.in_[sv], in_orders[sv], "incoming");
        apply(g.out_[sv], out_orders[sv], "outgoing");
    }

    g.in_pos_.assign(g.edges_.size(), -1);
    g.out_pos_.assign(g.edges_.size(), -1);
    for (Vertex v = 1; v <= vertex_count; ++v) {
        const auto sv = static_cast<std::size_t>(v);
        for (std::size_t k = 0; k < g.in_[sv].size(); ++k) g.in_pos_[static_cast<std::size_t>(g.in_[sv][k])] = static_cast<int>(k);
        for (std::size_t k = 0; k < g.out_[sv].size(); ++k) g.out_pos_[static_cast<std::size_t>(g.out_[sv][k])] = static_cast<int>(k);
    }

    for (Vertex v = 1; v <= vertex_count; ++v) {
        if (!g.is_internal(v)) continue;
        const auto& in = g.in_[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k + 1 < in.size(); ++k)
            g.left_corners_.push_back({Side::incoming, v, static_cast<int>(k), in[k], in[k + 1]});
        const auto& out = g.out_[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k + 1 < out.size(); ++k)
            g.right_corners_.push_back({Side::outgoing, v, static_cast<int>(k), out[k], out[k + 1]});
    }
    return g;
}

std::optional<EdgeIndex> FramedGraph::find_edge(std::string_view id) const {
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].id == id) return static_cast<EdgeIndex>(e);
    return std::nullopt;
}

int FramedGraph::source_count() const {
    int count = 0;
    for (Vertex v = 1; v <= vertex_count_; ++v) count += is_source(v) ? 1 : 0;
    return count;
}

int FramedGraph::sink_count() const {
    int count = 0;
    for (Vertex v = 1; v <= vertex_count_; ++v) count += is_sink(v) ? 1 : 0;
    return count;
}

int FramedGraph::clique_size() const { return edge_count() - vertex_count_ + source_count() + sink_count(); }

std::optional<int> FramedGraph::corner_index(const Corner& c) const {
    auto list = corners(c.side);
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || *it != c) return std::nullopt;
    return static_cast<int>(it - list.begin());
}

std::optional<Corner> FramedGraph::corner_between(Vertex apex, Side side, EdgeIndex a, EdgeIndex b) const {
    if (!is_internal(apex)) return std::nullopt;
    auto pos = [&](EdgeIndex e) -> int {
        const auto& edge = this->edge(e);
        if (side == Side::incoming) return edge.head == apex ? in_position(e) : -1;
        return edge.tail == apex ? out_position(e) : -1;
    };
    int pa = pos(a);
    int pb = pos(b);
    if (pa < 0 || pb < 0) return std::nullopt;
    if (pa > pb) {
        std::swap(pa, pb);
        std::swap(a, b);
    }
    if (pb != pa + 1) return std::nullopt;
    return Corner{side, apex, pa, a, b};
}

bool operator==(const FramedGraph& a, const FramedGraph& b) {
    if (a.vertex_count_ != b.vertex_count_ || a.base_ != b.base_ || a.edges_ != b.edges_) return false;
    for (Vertex v = 1; v <= a.vertex_count_; ++v) {
        if (!a.is_internal(v)) continue;
        const auto sv = static_cast<std::size_t>(v);
        if (a.in_[sv] != b.in_[sv] || a.out_[sv] != b.out_[sv]) return false;
    }
    return true;
}

bool same_up_to_edge_order(const FramedGraph& a, const FramedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::map<std::string, std::pair<Vertex, Vertex>> ea;
    for (const auto& e : a.edges()) ea[e.id] = {e.tail, e.head};
    for (const auto& e : b.edges()) {
        auto it = ea.find(e.id);
        if (it == ea.end() || it->second != std::pair{e.tail, e.head}) return false;
    }
    auto ids = [](const FramedGraph& g, std::span<const EdgeIndex> order) {
        std::vector<std::string> out;
        for (auto e : order) out.push_back(g.edge(e).id);
        return out;
    };
    for (Vertex v = 1; v <= a.vertex_count(); ++v) {
        if (!a.is_internal(v)) continue;
        if (ids(a, a.in_order(v)) != ids(b, b.in_order(v))) return false;
        if (ids(a, a.out_order(v)) != ids(b, b.out_order(v))) return false;
    }
    return true;
}

FramedGraph parse_framed_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<int> vertex_count;
    int base = 1;
    std::vector<Edge> edges;
    std::map<std::string, EdgeIndex> by_id;
    std::vector<std::vector<EdgeIndex>> in_orders;
    std::vector<std::vector<EdgeIndex>> out_orders;
    std::set<std::pair<int, int>> framed;  // (side, vertex) pairs already given

    auto parse_int = [&](const std::string& tok, const char* what) {
        try {
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return value;
        } catch (const std::exception&) {
            throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
        }
    };
    auto to_internal = [&](int label) {
        int v = label - base + 1;
        if (v < 1 || v > *vertex_count)
            throw ParseError(line_no, "vertex " + std::to_string(label) + " out of range");
        return v;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        // "in 3: a b" and "in 3 : a b" both tokenize the same way.
        std::string spaced;
        for (char ch : raw) {
            if (ch == ':') spaced += " : ";
            else spaced += ch;
        }
        std::istringstream words(spaced);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        if (!vertex_count) {
            if (tok[0] != "vertices" || tok.size() < 2 || tok.size() > 3)
                throw ParseError(line_no, "expected 'vertices <n> [base0|base1]' header");
            int n = parse_int(tok[1], "vertex count");
            if (n < 1) throw ParseError(line_no, "vertex count must be positive");
            if (tok.size() == 3) {
                if (tok[2] == "base0") base = 0;
                else if (tok[2] == "base1") base = 1;
                else throw ParseError(line_no, "unknown vertex base '" + tok[2] + "'");
            }
            vertex_count = n;
            in_orders.assign(static_cast<std::size_t>(n) + 1, {});
            out_orders.assign(static_cast<std::size_t>(n) + 1, {});
            continue;
        }

        if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError(line_no, "expected 'edge <id> <tail> <head>'");
            if (!valid_token(tok[1])) throw ParseError(line_no, "invalid edge id '" + tok[1] + "'");
            if (by_id.contains(tok[1]))
                throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge id '" + tok[1] + "'");
            int tail = to_internal(parse_int(tok[2], "tail vertex"));
            int head = to_internal(parse_int(tok[3], "head vertex"));
            if (tail >= head)
                throw ValidationError("line " + std::to_string(line_no) + ": edge '" + tok[1] +
                                      "' does not go from a smaller to a larger vertex (cycle)");
            by_id[tok[1]] = static_cast<EdgeIndex>(edges.size());
            edges.push_back({tok[1], tail, head});
        } else if (tok[0] == "in" || tok[0] == "out") {
            if (tok.size() < 3 || tok[2] != ":") throw ParseError(line_no, "expected '" + tok[0] + " <v>: <id> ...'");
            int v = to_internal(parse_int(tok[1], "vertex"));
            const int side = tok[0] == "in" ? 0 : 1;
            if (!framed.insert({side, v}).second)
                throw ParseError(line_no, "framing for vertex " + tok[1] + " given twice");
            auto& order = side == 0 ? in_orders[static_cast<std::size_t>(v)] : out_orders[static_cast<std::size_t>(v)];
            for (std::size_t k = 3; k < tok.size(); ++k) {
                auto it = by_id.find(tok[k]);
                if (it == by_id.end()) throw ParseError(line_no, "unknown edge id '" + tok[k] + "'");
                order.push_back(it->second);
            }
            if (order.empty()) throw ParseError(line_no, "empty framing sequence");
        } else if (tok[0] == "vertices") {
            throw ParseError(line_no, "duplicate 'vertices' header");
        } else {
            throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!vertex_count) throw ParseError(line_no, "missing 'vertices' header");
    return FramedGraph::create(*vertex_count, base, std::move(edges), std::move(in_orders), std::move(out_orders));
}

FramedGraph load_framed_graph(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_framed_graph(buffer.str());
}

std::string serialize(const FramedGraph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << (g.base() == 0 ? " base0" : " base1") << '\n';
    for (const auto& e : g.edges())
        out << "edge " << e.id << ' ' << g.external_label(e.tail) << ' ' << g.external_label(e.head) << '\n';
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_internal(v)) continue;
        out << "in " << g.external_label(v) << ": " << describe_order(g, g.in_order(v)) << '\n';
        out << "out " << g.external_label(v) << ": " << describe_order(g, g.out_order(v)) << '\n';
    }
    return out.str();
}

FramedGraph reflect_ud(const FramedGraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<std::vector<EdgeIndex>> in(static_cast<std::size_t>(g.vertex_count()) + 1);
    std::vector<std::vector<EdgeIndex>> out(in.size());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_internal(v)) continue;
        in[static_cast<std::size_t>(v)].assign(g.in_order(v).rbegin(), g.in_order(v).rend());
        out[static_cast<std::size_t>(v)].assign(g.out_order(v).rbegin(), g.out_order(v).rend());
    }
    return FramedGraph::create(g.vertex_count(), g.base(), std::move(edges), std::move(in), std::move(out));
}

FramedGraph reflect_lr(const FramedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& e : g.edges()) edges.push_back({e.id, mirror_vertex(g, e.head), mirror_vertex(g, e.tail)});
    std::vector<std::vector<EdgeIndex>> in(static_cast<std::size_t>(g.vertex_count()) + 1);
    std::vector<std::vector<EdgeIndex>> out(in.size());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_internal(v)) continue;
        const auto w = static_cast<std::size_t>(mirror_vertex(g, v));
        in[w].assign(g.out_order(v).begin(), g.out_order(v).end());
        out[w].assign(g.in_order(v).begin(), g.in_order(v).end());
    }
    return FramedGraph::create(g.vertex_count(), g.base(), std::move(edges), std::move(in), std::move(out));
}

FramedGraph oruga(int n) {
    if (n < 1) throw std::invalid_argument("oruga(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({"u" + std::to_string(i), i, i + 1});
        edges.push_back({"d" + std::to_string(i), i, i + 1});
    }
    // Declaration order already puts u_i before d_i on both sides.
    return FramedGraph::create(n + 1, 0, std::move(edges));
}

FramedGraph caracol(int n) {
    if (n < 2) throw std::invalid_argument("caracol(n) needs n >= 2");
    // Labels 0..n+2 map to internal vertices 1..n+3.
    const auto v = [](int label) { return label + 1; };
    std::vector<Edge> edges;
    for (int i = 0; i <= n + 1; ++i) edges.push_back({"p" + std::to_string(i), v(i), v(i + 1)});
    for (int i = 2; i <= n; ++i) edges.push_back({"s" + std::to_string(i), v(0), v(i)});
    for (int i = 2; i <= n; ++i) edges.push_back({"t" + std::to_string(i), v(i), v(n + 2)});
    // Path edges are declared first, so declaration order is the Tamari framing.
    return FramedGraph::create(n + 3, 0, std::move(edges));
}

}  // namespace latframe
