#include <doctest.h>

#include "hatkit/alternating.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/census.hpp"
#include "hatkit/cover.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/error.hpp"
#include "hatkit/serialize.hpp"

using namespace hat;

namespace {

Graph census_graph(const std::string& name)
{
    for (const auto& e : builtin_census())
        if (e.name == name)
            return e.graph;
    throw std::runtime_error(name + " missing");
}

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

struct Instance {
    Graph base;
    DartGraph dart;
    PermGroup group;
    Permutation tau;
};

Instance instance(const std::string& name)
{
    Graph base = census_graph(name);
    DartGraph dart = dart_graph(base);
    PermGroup group = lift_automorphisms(base, automorphism_group(base), dart);
    AltDecomposition dec = alternating_cycles(dart.graph, dart.natural);
    Permutation tau = antipodal_involution(dart.graph, dec, group);
    return {base, std::move(dart), std::move(group), tau};
}

} // namespace

TEST_CASE("quotient of Dart(Petersen) by its antipodal involution")
{
    Instance p = instance("petersen");
    CoveringMap cover = quotient_by_tau(p.dart.graph, p.tau);
    CHECK(cover.base.order() == 15);
    CHECK(is_regular(cover.base, 4));
    CHECK(cover.fold == 2);
    CHECK(cover.ct_group.order() == 2);
    for (const auto& fibre : cover.fibres())
        CHECK(fibre.size() == 2);
    CHECK(is_covering(cover.total, cover.base, cover.fibre_map));
    CHECK(is_isomorphic(cover.base, line_graph(p.base).graph).has_value());
}

TEST_CASE("quotient errors")
{
    Graph c6 = cycle_graph(6);
    CHECK(kind_of([&] { quotient_by_tau(c6, Permutation::from_cycles(6, {{1, 5}, {2, 4}})); }) ==
          ErrorKind::FixedPoint);
    // The reflection swapping neighbours 0-1, 2-5, 3-4 puts an edge inside an orbit.
    CHECK(kind_of([&] { quotient_by_tau(c6, Permutation::from_cycles(6, {{0, 1}, {2, 5}, {3, 4}})); }) ==
          ErrorKind::OrbitNotIndependent);

    // wreath_graph(3) with the antipodal map of its alternating structure.
    std::vector<Vertex> rot(6);
    for (Vertex v = 0; v < 6; ++v)
        rot[v] = (v + 2) % 6;
    PermGroup group = schreier_sims(6, {Permutation(rot), Permutation::from_cycles(6, {{0, 1}})});
    Graph w = wreath_graph(3);
    auto [d, rev] = induced_orientation(group, w);
    AltDecomposition dec = alternating_cycles(w, d);
    Permutation tau = antipodal_involution(w, dec, group);
    try {
        quotient_by_tau(w, tau);
        FAIL("expected DegenerateWreath");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateWreath);
        CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
    }
}

TEST_CASE("is_covering")
{
    Graph k4 = complete_graph(4);
    Graph point = Graph::from_edge_list(1, {});
    CHECK_FALSE(is_covering(k4, point, {0, 0, 0, 0}));

    Graph p = census_graph("petersen");
    Graph bd = bipartite_double(p);
    std::vector<Vertex> first(20);
    for (Vertex v = 0; v < 20; ++v)
        first[v] = v % 10;
    CHECK(is_covering(bd, p, first));

    // Not surjective.
    CHECK_FALSE(is_covering(cycle_graph(6), cycle_graph(6), {0, 1, 2, 0, 1, 2}));
    // C6 wraps twice around C3.
    CHECK(is_covering(cycle_graph(6), cycle_graph(3), {0, 1, 2, 0, 1, 2}));
}

TEST_CASE("split certificates")
{
    Instance p = instance("petersen");
    CoveringMap pc = quotient_by_tau(p.dart.graph, p.tau);
    SplitCertificate ps = split_certificate(p.dart.graph, p.group, p.tau, pc);
    CHECK(ps.is_split);
    CHECK_FALSE(ps.is_sectional);
    CHECK(ps.lifted_group.order() == 240);
    CHECK(ps.complement.order() == 120);
    REQUIRE(ps.non_bipartite_witness.has_value());
    CHECK(ps.non_bipartite_witness->size() % 2 == 1);

    Instance k = instance("k33");
    CoveringMap kc = quotient_by_tau(k.dart.graph, k.tau);
    SplitCertificate ks = split_certificate(k.dart.graph, k.group, k.tau, kc);
    CHECK(ks.is_split);
    CHECK(ks.is_sectional);
    CHECK_FALSE(ks.non_bipartite_witness.has_value());
    CHECK(is_isomorphic(k.dart.graph, bipartite_double(line_graph(k.base).graph)).has_value());

    // tau already inside the group.
    std::vector<Permutation> gens = p.group.generators();
    gens.push_back(p.tau);
    PermGroup with_tau = schreier_sims(30, gens);
    CHECK(kind_of([&] { split_certificate(p.dart.graph, with_tau, p.tau, pc); }) == ErrorKind::TauInG);

    // On C6 the half turn lies in the rotation group and does not commute
    // with a transposition.
    Graph c6 = cycle_graph(6);
    Permutation half = Permutation::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}});
    CoveringMap cc = quotient_by_tau(c6, half);
    CHECK(cc.base.order() == 3);
    PermGroup rotation = schreier_sims(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    CHECK(kind_of([&] { split_certificate(c6, rotation, half, cc); }) == ErrorKind::TauInG);
    PermGroup transposition = schreier_sims(6, {Permutation::from_cycles(6, {{0, 1}})});
    CHECK(kind_of([&] { split_certificate(c6, transposition, half, cc); }) == ErrorKind::NotCentralizing);
}

TEST_CASE("cover pipeline")
{
    Instance p = instance("petersen");
    CoverReport r = cover_pipeline(p.dart.graph, p.group, "petersen");
    CHECK(r.order == 30);
    CHECK_FALSE(r.bipartite);
    CHECK(r.split);
    CHECK_FALSE(r.sectional);
    CHECK(r.base_order == 15);
    CHECK(r.base_girth == 3);
    CHECK(r.order_g == 120);
    CHECK(r.order_g_tilde == 240);
    CHECK(r.order_h == 120);
    CHECK(r.base_is_line_graph_of == canonical_form(p.base).certificate);
    json j = r;
    CHECK(j["group_orders"]["G_tilde"] == "240");

    Instance k4 = instance("k4");
    CHECK(kind_of([&] { cover_pipeline(k4.dart.graph, k4.group); }) == ErrorKind::OrderTooSmall);

    Instance heawood = instance("heawood");
    CoverReport h = cover_pipeline(heawood.dart.graph, heawood.group, "heawood");
    CHECK(h.bipartite);
    CHECK(h.sectional);
    CHECK_FALSE(h.note.empty());

    Graph holt = census_graph("holt");
    CHECK(kind_of([&] { cover_pipeline(holt, automorphism_group(holt)); }) == ErrorKind::WrongParameters);
}

TEST_CASE("cover pipeline on Dart(Coxeter)")
{
    Instance c = instance("coxeter");
    CoverReport r = cover_pipeline(c.dart.graph, c.group, "coxeter");
    CHECK(r.order == 84);
    CHECK_FALSE(r.sectional);
    CHECK(r.base_girth == 3);
    CHECK(r.order_h * 2 == r.order_g_tilde);
}
