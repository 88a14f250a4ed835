#include "hatkit/cover.hpp"

#include <algorithm>

#include "hatkit/alternating.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/error.hpp"

namespace hat {

std::vector<std::vector<Vertex>> CoveringMap::fibres() const
{
    std::vector<std::vector<Vertex>> out(base.order());
    for (Vertex v = 0; v < fibre_map.size(); ++v)
        out[fibre_map[v]].push_back(v);
    return out;
}

CoveringMap quotient_by_tau(const Graph& g, const Permutation& tau)
{
    const std::size_t n = g.order();
    if (tau.degree() != n)
        throw Error(ErrorKind::DegreeMismatch, "involution of degree " + std::to_string(tau.degree()) +
                                                   " on a graph of order " + std::to_string(n));
    for (Vertex v = 0; v < n; ++v)
        if (tau(v) == v)
            throw Error(ErrorKind::FixedPoint, "vertex " + std::to_string(v) + " is fixed");
    if (!(tau * tau).is_identity())
        throw Error(ErrorKind::StructureViolation, "not an involution");
    if (!is_automorphism(g, tau))
        throw Error(ErrorKind::NotAutomorphisms, "involution is not an automorphism");

    constexpr Vertex unset = ~Vertex{0};
    std::vector<Vertex> fibre(n, unset);
    std::vector<Vertex> rep;
    for (Vertex v = 0; v < n; ++v) {
        if (fibre[v] != unset)
            continue;
        fibre[v] = fibre[tau(v)] = static_cast<Vertex>(rep.size());
        rep.push_back(v);
        if (g.adjacent(v, tau(v)))
            throw Error(ErrorKind::OrbitNotIndependent,
                        "orbit {" + std::to_string(v) + "," + std::to_string(tau(v)) + "} contains an edge");
    }

    std::vector<std::pair<Vertex, Vertex>> base_edges;
    for (const Edge& e : g.edges()) {
        Vertex a = fibre[e.u], b = fibre[e.v];
        if (a > b)
            std::swap(a, b);
        base_edges.emplace_back(a, b);
    }
    std::sort(base_edges.begin(), base_edges.end());
    // Each joined pair of orbits carries 2 edges (2K2) or 4 (K2,2).
    std::vector<std::pair<Vertex, Vertex>> unique;
    for (std::size_t i = 0; i < base_edges.size();) {
        std::size_t j = i;
        while (j < base_edges.size() && base_edges[j] == base_edges[i])
            ++j;
        if (j - i != 2) {
            auto [a, b] = base_edges[i];
            auto pair = "{" + std::to_string(rep[a]) + "," + std::to_string(tau(rep[a])) + "} and {" +
                        std::to_string(rep[b]) + "," + std::to_string(tau(rep[b])) + "}";
            if (j - i == 4)
                throw Error(ErrorKind::DegenerateWreath, "orbits " + pair + " induce K2,2");
            throw Error(ErrorKind::StructureViolation, "orbits " + pair + " joined by " + std::to_string(j - i) + " edges");
        }
        unique.push_back(base_edges[i]);
        i = j;
    }

    CoveringMap out;
    out.total = g;
    out.base = Graph::from_edge_list(rep.size(), unique);
    out.fibre_map = std::move(fibre);
    out.fold = 2;
    out.ct_group = schreier_sims(n, {tau});
    if (!is_covering(out.total, out.base, out.fibre_map))
        throw Error(ErrorKind::StructureViolation, "quotient map is not a covering projection");
    return out;
}

bool is_covering(const Graph& total, const Graph& base, const std::vector<Vertex>& fibre_map)
{
    if (fibre_map.size() != total.order())
        return false;
    std::vector<bool> hit(base.order(), false);
    for (Vertex f : fibre_map) {
        if (f >= base.order())
            return false;
        hit[f] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        return false;
    for (Vertex v = 0; v < total.order(); ++v) {
        const Vertex fv = fibre_map[v];
        if (total.degree(v) != base.degree(fv))
            return false;
        std::vector<Vertex> images;
        for (Vertex w : total.neighbours(v)) {
            if (!base.adjacent(fv, fibre_map[w]))
                return false;
            images.push_back(fibre_map[w]);
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            return false;
    }
    return true;
}

SplitCertificate split_certificate(const Graph& g, const PermGroup& group, const Permutation& tau,
                                   const CoveringMap& cover)
{
    if (!centralizes(tau, group))
        throw Error(ErrorKind::NotCentralizing, "tau does not commute with every generator");
    if (group.contains(tau))
        throw Error(ErrorKind::TauInG, "tau already lies in G");

    SplitCertificate cert;
    std::vector<Permutation> gens = group.generators();
    gens.push_back(tau);
    cert.lifted_group = schreier_sims(g.order(), std::move(gens));
    cert.complement = group;
    if (cert.lifted_group.order() != cover.fold * group.order())
        throw Error(ErrorKind::StructureViolation, "|G~| is not " + std::to_string(cover.fold) + "|G|");
    cert.is_split = true;
    cert.is_sectional = is_isomorphic(g, bipartite_double(cover.base)).has_value();
    cert.non_bipartite_witness = odd_closed_walk(g);
    return cert;
}

CoverReport cover_pipeline(const Graph& g, const PermGroup& group, const std::string& name)
{
    if (g.order() <= 12)
        throw Error(ErrorKind::OrderTooSmall, "order " + std::to_string(g.order()) + " is not greater than 12");
    auto [orientation, reverse] = induced_orientation(group, g);
    AltDecomposition dec = alternating_cycles(g, orientation);
    if (dec.radius != 3 || dec.attachment != 2)
        throw Error(ErrorKind::WrongParameters,
                    "r = " + std::to_string(dec.radius) + ", a = " + std::to_string(dec.attachment) + " (need 3, 2)");

    Permutation tau = antipodal_involution(g, dec, group);
    CoveringMap cover = quotient_by_tau(g, tau);
    SplitCertificate cert = split_certificate(g, group, tau, cover);

    CoverReport rep;
    rep.graph = name;
    rep.order = g.order();
    rep.bipartite = is_bipartite(g);
    rep.radius = dec.radius;
    rep.attachment = dec.attachment;
    rep.split = cert.is_split;
    rep.sectional = cert.is_sectional;
    rep.base_order = cover.base.order();
    rep.order_g = group.order();
    rep.order_g_tilde = cert.lifted_group.order();

    auto fibres = cover.fibres();
    InducedAction h = induced_action(cert.lifted_group, fibres);
    rep.order_h = h.group.order();
    if (rep.order_h * 2 != rep.order_g_tilde)
        throw Error(ErrorKind::StructureViolation, "projected group does not have order |G~|/2");
    if (!transitivity_report(h.group, cover.base).arc_transitive)
        throw Error(ErrorKind::StructureViolation, "projected group is not arc-transitive on the base");

    auto base_girth = girth(cover.base);
    rep.base_girth = base_girth.value_or(0);
    if (rep.base_girth != 3)
        throw Error(ErrorKind::StructureViolation, "base girth is " + std::to_string(rep.base_girth));

    AltGraph altg = alt_graph(g, dec);
    if (!is_regular(altg.graph, 3))
        throw Error(ErrorKind::StructureViolation, "graph of alternating cycles is not cubic");
    if (!induced_alt_action(group, dec, altg, g).transitivity.two_arc_transitive)
        throw Error(ErrorKind::StructureViolation, "action on alternating cycles is not 2-arc-transitive");
    if (!is_isomorphic(cover.base, line_graph(altg.graph).graph))
        throw Error(ErrorKind::StructureViolation, "base is not the line graph of the alternating-cycle graph");
    rep.base_is_line_graph_of = canonical_form(altg.graph).certificate;

    if (rep.sectional != rep.bipartite)
        throw Error(ErrorKind::StructureViolation, rep.bipartite ? "bipartite cover is not sectional"
                                                                 : "non-bipartite cover is sectional");
    if (rep.bipartite)
        rep.note = "bipartite input: sectional, outside the non-bipartite hypothesis";
    else if (!cert.non_bipartite_witness)
        throw Error(ErrorKind::StructureViolation, "no odd closed walk in a non-bipartite graph");
    return rep;
}

} // namespace hat
