#include <doctest.h>

#include "hatkit/census.hpp"
#include "hatkit/error.hpp"
#include "hatkit/graph.hpp"
#include "oracles.hpp"

using namespace hat;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no hat::Error raised");
    return ErrorKind::UnknownInput;
}

Graph petersen()
{
    for (const auto& e : builtin_census())
        if (e.name == "petersen")
            return e.graph;
    throw std::runtime_error("petersen missing");
}

} // namespace

TEST_CASE("from_edge_list builds sorted adjacency")
{
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {2, 1}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);
    CHECK(p3.edges()[1] == Edge{1, 2});
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(p3.edge_index(2, 1) == 1);
    CHECK_FALSE(p3.edge_index(0, 2).has_value());

    Graph k4 = complete_graph(4);
    CHECK(k4.size() == 6);
    CHECK(is_regular(k4, 3));
}

TEST_CASE("from_edge_list rejects malformed edge lists")
{
    CHECK(kind_of([] { Graph::from_edge_list(2, {{0, 0}}); }) == ErrorKind::LoopEdge);
    CHECK(kind_of([] { Graph::from_edge_list(3, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([] { Graph::from_edge_list(3, {{0, 3}}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("graph6 known encodings")
{
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(write_graph6(complete_graph(4)) == "C~");
    Graph one = parse_graph6("@");
    CHECK(one.order() == 1);
    CHECK(one.size() == 0);
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6("C~\n") == complete_graph(4));
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK(kind_of([] { parse_graph6(""); }) == ErrorKind::MalformedGraph6);
    CHECK(kind_of([] { parse_graph6("C~~"); }) == ErrorKind::MalformedGraph6);
    CHECK(kind_of([] { parse_graph6("C"); }) == ErrorKind::MalformedGraph6);
    CHECK(kind_of([] { parse_graph6("C }"); }) == ErrorKind::MalformedGraph6);
    // n = 2 has one data bit; the five padding bits must be zero.
    CHECK(kind_of([] { parse_graph6("A@"); }) == ErrorKind::MalformedGraph6);
    CHECK(kind_of([] { parse_graph6("~??~"); }) == ErrorKind::MalformedGraph6);
}

TEST_CASE("graph6 long size header")
{
    Graph c100 = cycle_graph(100);
    std::string s = write_graph6(c100);
    CHECK(s.substr(0, 4) == "~?@c");
    CHECK(parse_graph6(s) == c100);
}

TEST_CASE("graph6 round trip on 1000 random graphs")
{
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::size_t> order(0, 80);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        std::string s = write_graph6(g);
        Graph back = parse_graph6(s);
        REQUIRE(back == g);
        REQUIRE(write_graph6(back) == s);
    }
}

TEST_CASE("graph6 round trip on every census line")
{
    for (const auto& e : builtin_census()) {
        CAPTURE(e.name);
        CHECK(write_graph6(parse_graph6(e.graph6)) == e.graph6);
    }
}

TEST_CASE("structural predicates")
{
    Graph k4 = complete_graph(4);
    CHECK(is_connected(k4));
    CHECK(is_regular(k4, 3));
    CHECK_FALSE(is_bipartite(k4));
    CHECK(girth(k4) == 3);

    Graph k33 = complete_bipartite_graph(3, 3);
    auto parts = bipartition(k33);
    REQUIRE(parts.has_value());
    CHECK(std::count(parts->begin(), parts->end(), 0) == 3);
    for (const auto& e : k33.edges())
        CHECK((*parts)[e.u] != (*parts)[e.v]);

    Graph p = petersen();
    CHECK(girth(p) == 5);
    CHECK(girth(p) == oracle::girth(p));
    CHECK_FALSE(is_bipartite(p));

    CHECK_FALSE(girth(Graph::from_edge_list(3, {{0, 1}, {1, 2}})).has_value());
    CHECK_FALSE(is_connected(Graph::from_edge_list(3, {{0, 1}})));
}

TEST_CASE("girth and bipartiteness agree with oracles on random graphs")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> order(1, 14);
    std::uniform_real_distribution<double> density(0.05, 0.5);
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        CHECK(girth(g) == oracle::girth(g));
        CHECK(is_bipartite(g) == oracle::bipartite(g));
        auto walk = odd_closed_walk(g);
        CHECK(walk.has_value() != is_bipartite(g));
        if (walk) {
            CHECK(walk->size() % 2 == 1);
            for (std::size_t k = 0; k < walk->size(); ++k)
                CHECK(g.adjacent((*walk)[k], (*walk)[(k + 1) % walk->size()]));
        }
    }
}

TEST_CASE("line graph")
{
    LineGraph c5 = line_graph(cycle_graph(5));
    CHECK(c5.graph.order() == 5);
    CHECK(is_regular(c5.graph, 2));
    CHECK(is_connected(c5.graph));

    LineGraph k4 = line_graph(complete_graph(4));
    CHECK(k4.graph.order() == 6);
    CHECK(is_regular(k4.graph, 4));
    CHECK(girth(k4.graph) == 3);

    LineGraph lp = line_graph(petersen());
    CHECK(lp.graph.order() == 15);
    CHECK(is_regular(lp.graph, 4));

    CHECK(kind_of([] { line_graph(Graph::from_edge_list(3, {})); }) == ErrorKind::EmptyEdgeSet);
}

TEST_CASE("line graph degree and edge-count laws")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> order(2, 20);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(rng, order(rng), 0.3);
        if (g.size() == 0)
            continue;
        LineGraph lg = line_graph(g);
        std::size_t expected_edges = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            expected_edges += g.degree(v) * (g.degree(v) - (g.degree(v) > 0)) / 2;
        CHECK(lg.graph.size() == expected_edges);
        for (Vertex x = 0; x < lg.graph.order(); ++x) {
            Edge e = lg.vertex_edge[x];
            CHECK(lg.graph.degree(x) == g.degree(e.u) + g.degree(e.v) - 2);
        }
    }
}

TEST_CASE("bipartite double")
{
    Graph c5 = bipartite_double(cycle_graph(5));
    CHECK(c5.order() == 10);
    CHECK(is_regular(c5, 2));
    CHECK(is_connected(c5));

    Graph k33 = bipartite_double(complete_bipartite_graph(3, 3));
    CHECK(k33.order() == 12);
    CHECK_FALSE(is_connected(k33));

    Graph k4 = bipartite_double(complete_graph(4));
    CHECK(k4.order() == 8);
    CHECK(is_regular(k4, 3));
    CHECK(is_bipartite(k4));
    CHECK(is_connected(k4));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(rng, 2 + i % 12, 0.35);
        Graph d = bipartite_double(g);
        CHECK(d.size() == 2 * g.size());
        CHECK(is_bipartite(d));
        CHECK(is_connected(d) == (is_connected(g) && !is_bipartite(g)));
    }
}

TEST_CASE("relabel preserves structure")
{
    std::mt19937_64 rng(5);
    Graph g = oracle::random_graph(rng, 12, 0.4);
    auto images = oracle::random_permutation(rng, 12);
    Graph h = relabel(g, images);
    CHECK(h.size() == g.size());
    for (const auto& e : g.edges())
        CHECK(h.adjacent(images[e.u], images[e.v]));
}
