#include "hatkit/dart.hpp"

#include <algorithm>

#include "hatkit/error.hpp"

namespace hat {

DartLabeling::DartLabeling(std::vector<Arc> darts) : darts_(std::move(darts))
{
    std::sort(darts_.begin(), darts_.end());
}

Vertex DartLabeling::index(Vertex u, Vertex v) const
{
    auto it = std::lower_bound(darts_.begin(), darts_.end(), Arc{u, v});
    if (it == darts_.end() || *it != Arc{u, v})
        throw Error(ErrorKind::VertexOutOfRange, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not a dart");
    return static_cast<Vertex>(it - darts_.begin());
}

DartGraph dart_graph(const Graph& cubic)
{
    if (cubic.order() == 0 || !is_regular(cubic, 3))
        throw Error(ErrorKind::NotCubic, "dart graph needs a cubic graph");
    if (!is_connected(cubic))
        throw Error(ErrorKind::NotConnected, "dart graph needs a connected graph");

    std::vector<Arc> darts;
    for (const Edge& e : cubic.edges()) {
        darts.push_back(Arc{e.u, e.v});
        darts.push_back(Arc{e.v, e.u});
    }
    DartGraph out;
    out.labeling = DartLabeling(std::move(darts));

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < cubic.order(); ++v) {
        for (Vertex u : cubic.neighbours(v)) {
            for (Vertex w : cubic.neighbours(v)) {
                if (u == w)
                    continue;
                Vertex from = out.labeling.index(u, v);
                Vertex to = out.labeling.index(v, w);
                edges.emplace_back(from, to);
                arcs.push_back(Arc{from, to});
            }
        }
    }
    out.graph = Graph::from_edge_list(out.labeling.size(), edges);
    out.natural = Orientation::from_arcs(out.graph, arcs);
    return out;
}

Permutation dart_reversal(const DartGraph& dart)
{
    std::vector<Vertex> images(dart.labeling.size());
    for (Vertex i = 0; i < images.size(); ++i) {
        Arc a = dart.labeling.dart(i);
        images[i] = dart.labeling.index(a.head, a.tail);
    }
    Permutation tau(std::move(images));
    for (Vertex i = 0; i < tau.degree(); ++i)
        if (tau(i) == i)
            throw Error(ErrorKind::StructureViolation, "dart reversal has a fixed point");
    if (!(tau * tau).is_identity() || !is_automorphism(dart.graph, tau))
        throw Error(ErrorKind::StructureViolation, "dart reversal is not an involutory automorphism");
    for (const Arc& a : dart.natural.arcs())
        if (!dart.natural.has_arc(tau(a.head), tau(a.tail)))
            throw Error(ErrorKind::StructureViolation, "dart reversal does not reverse the natural orientation");
    return tau;
}

PermGroup lift_automorphisms(const Graph& base, const PermGroup& group, const DartGraph& dart)
{
    require_automorphisms(group, base);
    std::vector<Permutation> lifted;
    for (const Permutation& s : group.generators()) {
        std::vector<Vertex> images(dart.labeling.size());
        for (Vertex i = 0; i < images.size(); ++i) {
            Arc a = dart.labeling.dart(i);
            images[i] = dart.labeling.index(s(a.tail), s(a.head));
        }
        Permutation p(std::move(images));
        for (const Arc& a : dart.natural.arcs())
            if (!dart.natural.has_arc(p(a.tail), p(a.head)))
                throw Error(ErrorKind::StructureViolation, "lift does not preserve the natural orientation");
        lifted.push_back(std::move(p));
    }
    PermGroup out = schreier_sims(dart.labeling.size(), std::move(lifted));
    if (out.order() != group.order())
        throw Error(ErrorKind::StructureViolation, "lifted group order differs from the base group order");
    return out;
}

bool DartForwardReport::passed() const
{
    return half_arc_transitive && radius == 3 && attachment == 2 && alt_isomorphic_to_base &&
           natural_orientation_induced && cycles_match_vertex_stars;
}

namespace {

bool same_cyclic_sequence(const std::vector<Vertex>& a, std::vector<Vertex> b)
{
    if (a.size() != b.size())
        return false;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t shift = 0; shift < b.size(); ++shift) {
            if (a == b)
                return true;
            std::rotate(b.begin(), b.begin() + 1, b.end());
        }
        std::reverse(b.begin(), b.end());
    }
    return false;
}

} // namespace

DartForwardReport verify_dart_forward(const Graph& base, const PermGroup& group)
{
    auto base_report = transitivity_report(group, base);
    if (!base_report.two_arc_transitive)
        throw Error(ErrorKind::Not2ArcTransitive, "group has " + std::to_string(base_report.two_arc_orbit_count) +
                                                      " orbits on 2-arcs");
    DartGraph dart = dart_graph(base);
    PermGroup lifted = lift_automorphisms(base, group, dart);

    DartForwardReport r;
    r.base_order = base.order();
    r.dart_order = dart.graph.order();
    r.group_order = lifted.order();
    r.half_arc_transitive = transitivity_report(lifted, dart.graph).half_arc_transitive;

    auto [first, second] = induced_orientation(lifted, dart.graph);
    r.natural_orientation_induced = dart.natural == first || dart.natural == second;

    AltDecomposition dec = alternating_cycles(dart.graph, dart.natural);
    r.radius = dec.radius;
    r.attachment = dec.attachment;
    AltGraph altg = alt_graph(dart.graph, dec);
    r.alt_isomorphic_to_base = is_isomorphic(altg.graph, base).has_value();

    r.cycles_match_vertex_stars = true;
    for (Vertex v = 0; v < base.order(); ++v) {
        auto nb = base.neighbours(v);
        const Vertex u = nb[0], u1 = nb[1], u2 = nb[2];
        const auto& L = dart.labeling;
        std::vector<Vertex> expected{L.index(u, v),  L.index(v, u1), L.index(u2, v),
                                     L.index(v, u),  L.index(u1, v), L.index(v, u2)};
        auto e = dart.graph.edge_index(expected[0], expected[1]);
        if (!e || !same_cyclic_sequence(dec.cycles[dec.cycle_of_edge[*e]], expected))
            r.cycles_match_vertex_stars = false;
    }
    return r;
}

PsiReport psi_isomorphism(const Graph& g, const PermGroup& group)
{
    auto [orientation, reverse] = induced_orientation(group, g);
    AltDecomposition dec = alternating_cycles(g, orientation);
    if (dec.radius != 3 || dec.attachment != 2)
        throw Error(ErrorKind::WrongParameters,
                    "r = " + std::to_string(dec.radius) + ", a = " + std::to_string(dec.attachment) + " (need 3, 2)");
    AltGraph altg = alt_graph(g, dec);
    AltAction action = induced_alt_action(group, dec, altg, g);

    PsiReport rep;
    rep.alt = altg.graph;
    rep.alt_two_arc_transitive = action.transitivity.two_arc_transitive;
    rep.dart = dart_graph(altg.graph);

    // Vertex x is the head of both edges of its in-cycle C and lies on its
    // out-cycle C', so it is the image of the dart (C, C').
    std::vector<Vertex> cycle_vertex(dec.cycles.size());
    for (std::size_t i = 0; i < altg.vertex_cycle.size(); ++i)
        cycle_vertex[altg.vertex_cycle[i]] = static_cast<Vertex>(i);
    constexpr Vertex unset = ~Vertex{0};
    rep.psi.assign(rep.dart.graph.order(), unset);
    rep.bijective = rep.dart.graph.order() == g.order();
    for (Vertex x = 0; x < g.order() && rep.bijective; ++x) {
        auto [out_cycle, in_cycle] = dec.cycles_at_vertex[x];
        Vertex d = rep.dart.labeling.index(cycle_vertex[in_cycle], cycle_vertex[out_cycle]);
        if (rep.psi[d] != unset)
            rep.bijective = false;
        rep.psi[d] = x;
    }
    rep.bijective = rep.bijective && std::find(rep.psi.begin(), rep.psi.end(), unset) == rep.psi.end();
    if (!rep.bijective)
        return rep;

    rep.isomorphism = rep.dart.graph.size() == g.size();
    for (const Edge& e : rep.dart.graph.edges())
        rep.isomorphism = rep.isomorphism && g.adjacent(rep.psi[e.u], rep.psi[e.v]);
    rep.orientation_preserving = true;
    for (const Arc& a : rep.dart.natural.arcs())
        rep.orientation_preserving = rep.orientation_preserving && orientation.has_arc(rep.psi[a.tail], rep.psi[a.head]);
    return rep;
}

Graph wreath_graph(std::size_t r)
{
    if (r < 3)
        throw Error(ErrorKind::TooSmall, "wreath graph needs r >= 3, got " + std::to_string(r));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < r; ++i)
        for (Vertex j = 0; j < 2; ++j)
            for (Vertex k = 0; k < 2; ++k)
                edges.emplace_back(static_cast<Vertex>(2 * i + j), static_cast<Vertex>(2 * ((i + 1) % r) + k));
    return Graph::from_edge_list(2 * r, edges);
}

} // namespace hat
