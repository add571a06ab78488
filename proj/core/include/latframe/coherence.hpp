#ifndef LATFRAME_COHERENCE_HPP
#define LATFRAME_COHERENCE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "latframe/graph.hpp"

namespace latframe {

/// A path of the graph whose ends may be corners. The path runs from
/// `first_vertex` to `last_vertex` and may be empty, in which case both are
/// the same vertex. A left corner (if any) has its apex at `first_vertex`,
/// a right corner at `last_vertex`.
struct GeneralizedRoute {
    std::optional<Corner> left;
    std::vector<EdgeIndex> edges;
    std::optional<Corner> right;
    Vertex first_vertex = 0;
    Vertex last_vertex = 0;

    bool is_brick() const { return left.has_value() && right.has_value(); }
    bool is_left_cornered() const { return left.has_value() && !right.has_value(); }
    bool is_right_cornered() const { return !left.has_value() && right.has_value(); }
    bool is_plain() const { return !left.has_value() && !right.has_value(); }

    friend bool operator==(const GeneralizedRoute&, const GeneralizedRoute&) = default;
    friend auto operator<=>(const GeneralizedRoute&, const GeneralizedRoute&) = default;
};

enum class RouteKind { route, left_cornered, right_cornered, brick };

/// Builds and validates a generalized route. Vertex ends must be a source
/// (left) or a sink (right); corner ends must be corners of `g` on the
/// proper side whose apex is the path endpoint. Throws std::invalid_argument.
GeneralizedRoute make_generalized_route(const FramedGraph& g, std::optional<Corner> left,
                                        std::vector<EdgeIndex> edges, std::optional<Corner> right);
GeneralizedRoute make_route(const FramedGraph& g, std::vector<EdgeIndex> edges);
GeneralizedRoute make_brick(const FramedGraph& g, const Corner& left, std::vector<EdgeIndex> edges, const Corner& right);
GeneralizedRoute make_left_cornered(const FramedGraph& g, const Corner& left, std::vector<EdgeIndex> edges);

RouteKind kind_of(const GeneralizedRoute& s);
/// Vertices of the path, in order; a single vertex for an empty path.
std::vector<Vertex> path_vertices(const FramedGraph& g, const GeneralizedRoute& s);
bool passes_through(const FramedGraph& g, const GeneralizedRoute& s, Vertex v);

/// A letter of the extended order at a vertex: an edge or a corner.
using Letter = std::variant<EdgeIndex, Corner>;

/// The letter of `s` at `v` on `side`: its edge into (or out of) `v`, or its
/// corner when it ends there; nullopt at a vertex end. Throws
/// std::invalid_argument if `s` does not pass through `v`.
std::optional<Letter> letter_at(const FramedGraph& g, const GeneralizedRoute& s, Vertex v, Side side);

/// Compares two letters in the extended framing order at `v` on `side`: a
/// corner sits strictly between its two edges. Throws std::invalid_argument
/// if a letter is not incident to `v` on that side.
std::strong_ordering extended_letter_compare(const FramedGraph& g, Vertex v, Side side, const Letter& a,
                                             const Letter& b);

/// Outgoing side compares the words after `v`, incoming side the words
/// before `v` read right to left. Throws std::invalid_argument if a route
/// does not pass through `v`.
std::strong_ordering cmp_preorder(const FramedGraph& g, Vertex v, Side side, const GeneralizedRoute& s,
                                  const GeneralizedRoute& t);

/// s <_v^- t and s >_v^+ t.
bool is_clockwise_at(const FramedGraph& g, const GeneralizedRoute& s, const GeneralizedRoute& t, Vertex v);

struct Coherent {
    friend bool operator==(const Coherent&, const Coherent&) = default;
};
struct SharedLeftCorner {
    Corner corner;
    friend bool operator==(const SharedLeftCorner&, const SharedLeftCorner&) = default;
};
struct SharedRightCorner {
    Corner corner;
    friend bool operator==(const SharedRightCorner&, const SharedRightCorner&) = default;
};
/// The first argument is clockwise to the second at `vertex`.
struct FirstClockwiseAt {
    Vertex vertex;
    friend bool operator==(const FirstClockwiseAt&, const FirstClockwiseAt&) = default;
};
struct SecondClockwiseAt {
    Vertex vertex;
    friend bool operator==(const SecondClockwiseAt&, const SecondClockwiseAt&) = default;
};

using CoherenceVerdict = std::variant<Coherent, SharedLeftCorner, SharedRightCorner, FirstClockwiseAt, SecondClockwiseAt>;

/// Shared corners are reported first; otherwise the smallest vertex where
/// one route is clockwise to the other.
CoherenceVerdict coherence(const FramedGraph& g, const GeneralizedRoute& s, const GeneralizedRoute& t);
bool is_coherent(const CoherenceVerdict& verdict);
bool is_weakly_coherent(const CoherenceVerdict& verdict);
inline bool coherent(const FramedGraph& g, const GeneralizedRoute& s, const GeneralizedRoute& t) {
    return is_coherent(coherence(g, s, t));
}
inline bool weakly_coherent(const FramedGraph& g, const GeneralizedRoute& s, const GeneralizedRoute& t) {
    return is_weakly_coherent(coherence(g, s, t));
}

/// Maximal common subpath around an incoherence; `edges` may be empty.
struct ConflictSubroute {
    std::vector<EdgeIndex> edges;
    Vertex start = 0;
    Vertex end = 0;
    friend bool operator==(const ConflictSubroute&, const ConflictSubroute&) = default;
    friend auto operator<=>(const ConflictSubroute&, const ConflictSubroute&) = default;
};

std::vector<ConflictSubroute> conflict_subroutes(const FramedGraph& g, const GeneralizedRoute& p,
                                                 const GeneralizedRoute& q);

/// All source-to-sink paths, sorted by edge index sequence.
std::vector<GeneralizedRoute> enumerate_routes(const FramedGraph& g);
/// Ordered by left corner, then path, then right corner.
std::vector<GeneralizedRoute> enumerate_bricks(const FramedGraph& g);
std::vector<GeneralizedRoute> enumerate_left_cornered_routes(const FramedGraph& g);
std::vector<GeneralizedRoute> enumerate_right_cornered_routes(const FramedGraph& g);

/// Text notation: routes print as `e1-e2`, a left corner as `[v:a|b>`, a
/// right corner as `<a|b:v]`, joined with a middle dot.
std::string format_corner(const FramedGraph& g, const Corner& c);
std::string format_route(const FramedGraph& g, const GeneralizedRoute& s);
/// Inverse of format_route. Accepts '.' in place of the middle dot.
GeneralizedRoute parse_route(const FramedGraph& g, std::string_view text);
/// Splits on commas, semicolons and whitespace.
std::vector<GeneralizedRoute> parse_route_list(const FramedGraph& g, std::string_view text);

}  // namespace latframe

#endif  // LATFRAME_COHERENCE_HPP
