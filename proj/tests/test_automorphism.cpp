#include <doctest.h>

#include "hatkit/automorphism.hpp"
#include "hatkit/census.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/error.hpp"
#include "oracles.hpp"

using namespace hat;

namespace {

Graph census_graph(const std::string& name)
{
    for (const auto& e : builtin_census())
        if (e.name == name)
            return e.graph;
    throw std::runtime_error(name + " missing");
}

} // namespace

TEST_CASE("refine")
{
    Graph p = census_graph("petersen");
    CHECK(refine(p, ColoredPartition::unit(10)).cell_count() == 1);

    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    ColoredPartition r = refine(p3, ColoredPartition::unit(3));
    REQUIRE(r.cell_count() == 2);
    CHECK(r.cells[0] == std::vector<Vertex>{0, 2});
    CHECK(r.cells[1] == std::vector<Vertex>{1});

    ColoredPartition ind = refine(p, individualize(ColoredPartition::unit(10), 0));
    std::vector<std::size_t> sizes;
    for (const auto& c : ind.cells)
        sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 6});
}

TEST_CASE("refine is idempotent and equitable")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        Graph g = oracle::random_graph(rng, 2 + i % 15, 0.3);
        ColoredPartition r = refine(g, ColoredPartition::unit(g.order()));
        CHECK(refine(g, r) == r);
        std::vector<std::size_t> cell_of(g.order());
        for (std::size_t c = 0; c < r.cells.size(); ++c)
            for (Vertex v : r.cells[c])
                cell_of[v] = c;
        for (const auto& cell : r.cells) {
            std::vector<std::size_t> first(r.cells.size(), 0);
            for (Vertex w : g.neighbours(cell[0]))
                ++first[cell_of[w]];
            for (Vertex v : cell) {
                std::vector<std::size_t> counts(r.cells.size(), 0);
                for (Vertex w : g.neighbours(v))
                    ++counts[cell_of[w]];
                CHECK(counts == first);
            }
        }
    }
}

TEST_CASE("small automorphism groups")
{
    CHECK(automorphism_group(complete_graph(4)).order() == 24);
    CHECK(automorphism_group(cycle_graph(5)).order() == 10);
    CHECK(automorphism_group(Graph::from_edge_list(0, {})).order() == 1);
    CHECK(automorphism_group(Graph::from_edge_list(5, {})).order() == 120);
}

TEST_CASE("automorphism group order matches brute force on 500 random graphs")
{
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<std::size_t> order(1, 8);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        PermGroup aut = automorphism_group(g);
        CAPTURE(write_graph6(g));
        REQUIRE(aut.order() == oracle::brute_force_aut_count(g));
        for (const auto& s : aut.generators())
            CHECK(is_automorphism(g, s));
    }
}

TEST_CASE("Aut(Petersen) against the 10! oracle")
{
    Graph p = census_graph("petersen");
    CHECK(oracle::brute_force_aut_count(p) == 120);
    CHECK(automorphism_group(p).order() == 120);
}

TEST_CASE("isomorphism under random relabelling")
{
    std::mt19937_64 rng(200);
    std::uniform_int_distribution<std::size_t> order(1, 40);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        Graph h = relabel(g, oracle::random_permutation(rng, g.order()));
        auto iso = is_isomorphic(g, h);
        REQUIRE(iso.has_value());
        std::size_t mapped = 0;
        for (const auto& e : g.edges()) {
            CHECK(h.adjacent((*iso)(e.u), (*iso)(e.v)));
            ++mapped;
        }
        CHECK(mapped == h.size());
        CHECK(canonical_form(g).certificate == canonical_form(h).certificate);
    }
}

TEST_CASE("canonical certificates separate census graphs")
{
    auto census = builtin_census();
    for (std::size_t i = 0; i < census.size(); ++i)
        for (std::size_t j = i + 1; j < census.size(); ++j)
            CHECK(canonical_form(census[i].graph).certificate != canonical_form(census[j].graph).certificate);
}

TEST_CASE("non-isomorphic pairs")
{
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_isomorphic(p3, complete_graph(3)).has_value());

    Graph k4 = complete_graph(4);
    Graph d = dart_graph(k4).graph;
    Graph bd = bipartite_double(line_graph(k4).graph);
    CHECK(d.order() == bd.order());
    CHECK_FALSE(is_isomorphic(d, bd).has_value());

    // Same degree sequence, different graphs: C6 and two triangles.
    Graph two_triangles = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_isomorphic(cycle_graph(6), two_triangles).has_value());
}

TEST_CASE("transitivity reports")
{
    Graph p = census_graph("petersen");
    auto t = transitivity_report(automorphism_group(p), p);
    CHECK(t.vertex_transitive);
    CHECK(t.edge_transitive);
    CHECK(t.arc_transitive);
    CHECK(t.two_arc_transitive);
    CHECK_FALSE(t.half_arc_transitive);
    CHECK(t.arc_orbit_count == 1);

    Graph k4 = complete_graph(4);
    auto trivial = transitivity_report(schreier_sims(4, {}), k4);
    CHECK_FALSE(trivial.vertex_transitive);
    CHECK_FALSE(trivial.edge_transitive);
    CHECK_FALSE(trivial.arc_transitive);
    CHECK(trivial.arc_orbit_count == 12);

    DartGraph dart = dart_graph(k4);
    PermGroup lifted = lift_automorphisms(k4, automorphism_group(k4), dart);
    auto dt = transitivity_report(lifted, dart.graph);
    CHECK(dt.vertex_transitive);
    CHECK(dt.edge_transitive);
    CHECK_FALSE(dt.arc_transitive);
    CHECK(dt.half_arc_transitive);
    CHECK(dt.arc_orbit_count == 2);

    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    try {
        transitivity_report(schreier_sims(3, {Permutation::from_cycles(3, {{0, 1}})}), p3);
        FAIL("expected NotAutomorphisms");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAutomorphisms);
    }
}

TEST_CASE("transitivity implications hold on census and random groups")
{
    std::mt19937_64 rng(8);
    auto check = [](const TransitivityReport& t) {
        CHECK((!t.two_arc_transitive || t.arc_transitive));
        CHECK((!t.arc_transitive || t.edge_transitive));
        CHECK(t.half_arc_transitive == (t.vertex_transitive && t.edge_transitive && !t.arc_transitive));
    };
    for (const auto& e : builtin_census()) {
        PermGroup aut = automorphism_group(e.graph);
        check(transitivity_report(aut, e.graph));
        // A random cyclic subgroup.
        Permutation x = Permutation::identity(e.graph.order());
        std::uniform_int_distribution<std::size_t> pick(0, aut.generators().size() - 1);
        for (int k = 0; k < 5; ++k)
            x = x * aut.generators()[pick(rng)];
        check(transitivity_report(schreier_sims(e.graph.order(), {x}), e.graph));
    }
}

TEST_CASE("arc orbits")
{
    Graph k33 = complete_bipartite_graph(3, 3);
    DartGraph dart = dart_graph(k33);
    PermGroup lifted = lift_automorphisms(k33, automorphism_group(k33), dart);
    auto orbits = arc_orbits(lifted, dart.graph);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].size() == 36);
    CHECK(orbits[1].size() == 36);
    for (const Arc& a : orbits[0])
        CHECK(std::binary_search(orbits[1].begin(), orbits[1].end(), Arc{a.head, a.tail}));

    CHECK(arc_orbits(automorphism_group(k33), k33).size() == 1);
    CHECK(arc_orbits(schreier_sims(6, {}), k33).size() == 18);
}

TEST_CASE("search size guard")
{
    try {
        automorphism_group(cycle_graph(max_search_order + 1));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}
