#ifndef LATFRAME_GRAPH_HPP
#define LATFRAME_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latframe {

// Vertices are stored 1..n regardless of how the input numbered them.
using Vertex = int;
// Position of an edge in declaration order.
using EdgeIndex = int;

struct Edge {
    std::string id;
    Vertex tail = 0;
    Vertex head = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Side { incoming, outgoing };

/// A pair of framing-consecutive edges at an internal vertex. Left corners
/// live on the incoming side, right corners on the outgoing side. `lower`
/// is the framing-smaller edge, sitting at `position` in the order; `upper`
/// sits at `position + 1`.
struct Corner {
    Side side = Side::incoming;
    Vertex apex = 0;
    int position = 0;
    EdgeIndex lower = 0;
    EdgeIndex upper = 0;

    bool is_left() const { return side == Side::incoming; }

    friend bool operator==(const Corner&, const Corner&) = default;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable directed acyclic graph with a total order on the incoming and on
/// the outgoing edges of every internal vertex.
class FramedGraph {
public:
    /// `in_orders[v]` / `out_orders[v]` list edge indices smallest first and
    /// are indexed by internal vertex (entry 0 unused). An empty entry for an
    /// internal vertex means declaration order. Throws ValidationError.
    static FramedGraph create(int vertex_count, int base, std::vector<Edge> edges,
                              std::vector<std::vector<EdgeIndex>> in_orders = {},
                              std::vector<std::vector<EdgeIndex>> out_orders = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int base() const { return base_; }
    int external_label(Vertex v) const { return v - 1 + base_; }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::optional<EdgeIndex> find_edge(std::string_view id) const;

    bool is_source(Vertex v) const { return in_[idx(v)].empty(); }
    bool is_sink(Vertex v) const { return out_[idx(v)].empty(); }
    bool is_internal(Vertex v) const { return !is_source(v) && !is_sink(v); }
    int source_count() const;
    int sink_count() const;

    /// Incident edges smallest first. At sources and sinks the order is the
    /// declaration order and carries no framing information.
    std::span<const EdgeIndex> in_order(Vertex v) const { return in_[idx(v)]; }
    std::span<const EdgeIndex> out_order(Vertex v) const { return out_[idx(v)]; }
    std::span<const EdgeIndex> order(Vertex v, Side side) const {
        return side == Side::incoming ? in_order(v) : out_order(v);
    }

    /// Position of `e` in `in_order(head)` and `out_order(tail)` respectively.
    int in_position(EdgeIndex e) const { return in_pos_[static_cast<std::size_t>(e)]; }
    int out_position(EdgeIndex e) const { return out_pos_[static_cast<std::size_t>(e)]; }

    std::span<const Corner> left_corners() const { return left_corners_; }
    std::span<const Corner> right_corners() const { return right_corners_; }
    std::span<const Corner> corners(Side side) const {
        return side == Side::incoming ? left_corners() : right_corners();
    }
    /// Index into `corners(c.side)`, or nullopt when `c` is not a corner of this graph.
    std::optional<int> corner_index(const Corner& c) const;
    /// Corner formed by two edges at `apex` that are consecutive in the framing
    /// on `side`, in either argument order.
    std::optional<Corner> corner_between(Vertex apex, Side side, EdgeIndex a, EdgeIndex b) const;

    /// Size shared by all maximal cliques: |E| - |V| + sources + sinks.
    int clique_size() const;

    friend bool operator==(const FramedGraph&, const FramedGraph&);

private:
    FramedGraph() = default;
    std::size_t idx(Vertex v) const;

    int vertex_count_ = 0;
    int base_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> in_;
    std::vector<std::vector<EdgeIndex>> out_;
    std::vector<int> in_pos_;
    std::vector<int> out_pos_;
    std::vector<Corner> left_corners_;
    std::vector<Corner> right_corners_;
};

FramedGraph parse_framed_graph(std::string_view text);
FramedGraph load_framed_graph(const std::string& path);
/// Canonical text form; `parse_framed_graph(serialize(g)) == g`.
std::string serialize(const FramedGraph& g);

/// Same graph with every framing sequence reversed.
FramedGraph reflect_ud(const FramedGraph& g);
/// Reverses every edge, renumbering vertex i to n+1-i, and swaps the incoming
/// and outgoing orders. Edge ids are kept.
FramedGraph reflect_lr(const FramedGraph& g);
/// Vertex of reflect_lr(g) corresponding to `v`.
inline Vertex mirror_vertex(const FramedGraph& g, Vertex v) { return g.vertex_count() + 1 - v; }

/// Renames edges; `rename(id)` must be injective. Framings follow the edges.
template <typename F>
FramedGraph relabel_edges(const FramedGraph& g, F&& rename);

/// Equality up to the declaration order of edges: same vertices, same
/// (id, tail, head) triples, same framing sequences read as ids.
bool same_up_to_edge_order(const FramedGraph& a, const FramedGraph& b);

/// Weak-order graph: vertices 0..n, edges u_i < d_i from i-1 to i.
FramedGraph oruga(int n);
/// Tamari-framed caracol graph on vertices 0..n+2; path edges come first.
FramedGraph caracol(int n);

template <typename F>
FramedGraph relabel_edges(const FramedGraph& g, F&& rename) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.id = rename(e.id);
    std::vector<std::vector<EdgeIndex>> in(static_cast<std::size_t>(g.vertex_count()) + 1);
    std::vector<std::vector<EdgeIndex>> out(in.size());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_internal(v)) continue;
        in[static_cast<std::size_t>(v)].assign(g.in_order(v).begin(), g.in_order(v).end());
        out[static_cast<std::size_t>(v)].assign(g.out_order(v).begin(), g.out_order(v).end());
    }
    return FramedGraph::create(g.vertex_count(), g.base(), std::move(edges), std::move(in), std::move(out));
}

}  // namespace latframe

#endif  // LATFRAME_GRAPH_HPP
