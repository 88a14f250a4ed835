#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hat {

using Vertex = std::uint32_t;

/// Unordered pair of distinct vertices, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered adjacent pair (tail -> head); also called a dart.
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted; the edge list is sorted lexicographically with
/// u < v in every entry, and an edge's position in that list is its index.
class Graph {
public:
    Graph() = default;

    /// Pairs may be given in either order. Throws LoopEdge, DuplicateEdge or
    /// VertexOutOfRange.
    static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
    static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbours(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

// graph6 interchange format (short and long size headers).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g, std::size_t valence);

/// A proper 2-colouring (0/1 per vertex) when one exists.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Length of a shortest cycle; empty for forests.
std::optional<std::size_t> girth(const Graph& g);

/// A closed walk of odd length (first vertex not repeated at the end), or
/// empty when the graph is bipartite.
std::optional<std::vector<Vertex>> odd_closed_walk(const Graph& g);

/// Vertex i of the line graph is edge i of the input.
struct LineGraph {
    Graph graph;
    std::vector<Edge> vertex_edge;
};
LineGraph line_graph(const Graph& g);

/// Vertex (v, s) of the double is v + s * n.
Graph bipartite_double(const Graph& g);

/// Graph with vertex v renamed to images[v].
Graph relabel(const Graph& g, std::span<const Vertex> images);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

} // namespace hat
