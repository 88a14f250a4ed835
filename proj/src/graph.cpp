#include "hatkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hatkit/error.hpp"

namespace hat {

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    Graph g;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge {" + std::to_string(a) + "," + std::to_string(b) + "} with n=" + std::to_string(n));
        if (a == b)
            throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw Error(ErrorKind::DuplicateEdge,
                    "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} listed twice");
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());
    return g;
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
{
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u >= order() || v >= order())
        return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const
{
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.order();
}

bool is_regular(const Graph& g, std::size_t valence)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != valence)
            return false;
    return true;
}

namespace {

// BFS 2-colouring; parent links are kept so an odd walk can be extracted.
struct Colouring {
    std::vector<std::uint8_t> colour;
    std::optional<std::vector<Vertex>> odd_walk;
};

Colouring two_colour(const Graph& g)
{
    constexpr auto unset = std::numeric_limits<Vertex>::max();
    Colouring out;
    out.colour.assign(g.order(), 2);
    std::vector<Vertex> parent(g.order(), unset);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (out.colour[root] != 2)
            continue;
        out.colour[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbours(v)) {
                if (out.colour[w] == 2) {
                    out.colour[w] = static_cast<std::uint8_t>(1 - out.colour[v]);
                    parent[w] = v;
                    queue.push_back(w);
                } else if (out.colour[w] == out.colour[v]) {
                    // Both tree paths to the root plus the edge vw close an odd walk.
                    std::vector<Vertex> up_v, up_w;
                    for (Vertex x = v; x != unset; x = parent[x])
                        up_v.push_back(x);
                    for (Vertex x = w; x != unset; x = parent[x])
                        up_w.push_back(x);
                    while (up_v.size() > 1 && up_w.size() > 1 && up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
                        up_v.pop_back();
                        up_w.pop_back();
                    }
                    // up_v and up_w now end at their lowest common ancestor;
                    // the walk runs v .. lca .. w and closes along wv.
                    std::vector<Vertex> walk(up_v.begin(), up_v.end());
                    for (std::size_t i = up_w.size() - 1; i-- > 0;)
                        walk.push_back(up_w[i]);
                    out.odd_walk = std::move(walk);
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g)
{
    auto c = two_colour(g);
    if (c.odd_walk)
        return std::nullopt;
    return std::move(c.colour);
}

std::optional<std::vector<Vertex>> odd_closed_walk(const Graph& g)
{
    return two_colour(g).odd_walk;
}

std::optional<std::size_t> girth(const Graph& g)
{
    // BFS from every vertex; a non-tree edge at depths (d, d') closes a cycle of
    // length at most d + d' + 1, and the minimum over roots is exact.
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::size_t best = unset;
    std::vector<std::size_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    for (Vertex root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), unset);
        dist[root] = 0;
        parent[root] = root;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            if (2 * dist[v] + 1 >= best)
                break;
            for (Vertex w : g.neighbours(v)) {
                if (dist[w] == unset) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == unset)
        return std::nullopt;
    return best;
}

LineGraph line_graph(const Graph& g)
{
    if (g.size() == 0)
        throw Error(ErrorKind::EmptyEdgeSet, "line graph of an edgeless graph");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                pairs.emplace_back(static_cast<Vertex>(*g.edge_index(v, nb[i])),
                                   static_cast<Vertex>(*g.edge_index(v, nb[j])));
    }
    return LineGraph{Graph::from_edge_list(g.size(), pairs), g.edges()};
}

Graph bipartite_double(const Graph& g)
{
    const auto n = static_cast<Vertex>(g.order());
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(2 * g.size());
    for (const Edge& e : g.edges()) {
        pairs.emplace_back(e.u, e.v + n);
        pairs.emplace_back(e.v, e.u + n);
    }
    return Graph::from_edge_list(2 * g.order(), pairs);
}

Graph relabel(const Graph& g, std::span<const Vertex> images)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.size());
    for (const Edge& e : g.edges())
        pairs.emplace_back(images[e.u], images[e.v]);
    return Graph::from_edge_list(g.order(), pairs);
}

Graph cycle_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            pairs.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph::from_edge_list(a + b, pairs);
}

} // namespace hat
