#include "hatkit/alternating.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hatkit/error.hpp"

namespace hat {

// --- Orientation -------------------------------------------------------------

Orientation Orientation::from_arcs(const Graph& g, std::span<const Arc> arcs)
{
    Orientation d;
    d.arcs_.assign(g.size(), Arc{});
    std::vector<bool> seen(g.size(), false);
    if (arcs.size() != g.size())
        throw Error(ErrorKind::OrientationInvalid,
                    std::to_string(arcs.size()) + " arcs for " + std::to_string(g.size()) + " edges");
    d.out_.assign(g.order(), {});
    d.in_.assign(g.order(), {});
    for (const Arc& a : arcs) {
        auto e = g.edge_index(a.tail, a.head);
        if (!e)
            throw Error(ErrorKind::OrientationInvalid,
                        "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " is not an edge");
        if (seen[*e])
            throw Error(ErrorKind::OrientationInvalid, "edge oriented twice");
        seen[*e] = true;
        d.arcs_[*e] = a;
        d.out_[a.tail].push_back(a.head);
        d.in_[a.head].push_back(a.tail);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d.out_[v].size() != 2 || d.in_[v].size() != 2)
            throw Error(ErrorKind::OrientationInvalid,
                        "vertex " + std::to_string(v) + " has out-degree " + std::to_string(d.out_[v].size()) +
                            " and in-degree " + std::to_string(d.in_[v].size()));
        std::sort(d.out_[v].begin(), d.out_[v].end());
        std::sort(d.in_[v].begin(), d.in_[v].end());
    }
    return d;
}

Orientation Orientation::reversed() const
{
    Orientation r;
    r.arcs_.reserve(arcs_.size());
    for (const Arc& a : arcs_)
        r.arcs_.push_back(Arc{a.head, a.tail});
    r.out_ = in_;
    r.in_ = out_;
    return r;
}

bool Orientation::has_arc(Vertex tail, Vertex head) const
{
    if (tail >= out_.size())
        return false;
    const auto& o = out_[tail];
    return std::find(o.begin(), o.end(), head) != o.end();
}

std::pair<Orientation, Orientation> induced_orientation(const PermGroup& group, const Graph& g)
{
    if (g.order() == 0 || !is_regular(g, 4))
        throw Error(ErrorKind::NotTetravalent, "graph is not 4-regular");
    auto report = transitivity_report(group, g);
    if (!report.half_arc_transitive)
        throw Error(ErrorKind::NotHalfArcTransitive,
                    "action has " + std::to_string(report.vertex_orbit_count) + " vertex, " +
                        std::to_string(report.edge_orbit_count) + " edge and " +
                        std::to_string(report.arc_orbit_count) + " arc orbits");
    auto orbits = arc_orbits(group, g);
    const Edge& first = g.edges().front();
    const Arc key{first.u, first.v};
    std::size_t pick = std::binary_search(orbits[0].begin(), orbits[0].end(), key) ? 0 : 1;
    auto d = Orientation::from_arcs(g, orbits[pick]);
    return {d, d.reversed()};
}

// --- Alternating cycles --------------------------------------------------------

namespace {

Vertex other_of(const std::vector<Vertex>& pair, Vertex x)
{
    return pair[0] == x ? pair[1] : pair[0];
}

// Rotate so the smallest vertex leads, then orient towards its smaller neighbour.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> c)
{
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() > 2 && c.back() < c[1])
        std::reverse(c.begin() + 1, c.end());
    return c;
}

bool equally_spaced(std::vector<std::size_t> positions, std::size_t length, std::size_t step)
{
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        std::size_t next = positions[(i + 1) % positions.size()];
        std::size_t gap = (next + length - positions[i]) % length;
        if (positions.size() == 1)
            gap = length;
        if (gap != step)
            return false;
    }
    return true;
}

[[noreturn]] void violation(const std::string& what)
{
    throw Error(ErrorKind::StructureViolation, what);
}

} // namespace

AltDecomposition alternating_cycles(const Graph& g, const Orientation& d)
{
    if (d.arcs().size() != g.size())
        throw Error(ErrorKind::OrientationInvalid, "orientation does not match the graph");
    for (std::size_t e = 0; e < g.size(); ++e) {
        Arc a = d.arc_of_edge(e);
        if (g.edge_index(a.tail, a.head) != e)
            throw Error(ErrorKind::OrientationInvalid, "orientation arc does not match edge " + std::to_string(e));
    }

    std::vector<bool> used(g.size(), false);
    std::vector<std::vector<Vertex>> traced;
    for (std::size_t e0 = 0; e0 < g.size(); ++e0) {
        if (used[e0])
            continue;
        used[e0] = true;
        const Arc start = d.arc_of_edge(e0);
        std::vector<Vertex> seq{start.tail, start.head};
        Vertex prev = start.tail;
        Vertex cur = start.head;
        bool at_head = true;
        for (std::size_t steps = 0;; ++steps) {
            if (steps > g.size())
                violation("alternating walk did not close");
            Vertex next = at_head ? other_of(d.in_neighbours(cur), prev) : other_of(d.out_neighbours(cur), prev);
            std::size_t e = *g.edge_index(cur, next);
            if (e == e0)
                break;
            if (used[e])
                violation("alternating walks overlap on edge " + std::to_string(e));
            used[e] = true;
            seq.push_back(next);
            prev = cur;
            cur = next;
            at_head = !at_head;
        }
        seq.pop_back(); // closing vertex repeats the start
        traced.push_back(std::move(seq));
    }

    AltDecomposition dec;
    for (auto& c : traced) {
        std::set<Vertex> distinct(c.begin(), c.end());
        if (distinct.size() != c.size())
            violation("alternating walk revisits a vertex");
        dec.cycles.push_back(canonical_cycle(std::move(c)));
    }
    std::sort(dec.cycles.begin(), dec.cycles.end());

    const std::size_t length = dec.cycles.front().size();
    for (const auto& c : dec.cycles)
        if (c.size() != length)
            violation("alternating cycles of different lengths");
    if (length % 2 != 0)
        violation("odd alternating cycle");
    dec.radius = length / 2;

    dec.cycle_of_edge.assign(g.size(), 0);
    std::vector<std::vector<std::size_t>> position(g.order());
    std::vector<std::vector<std::size_t>> on_cycles(g.order());
    std::size_t total = 0;
    for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci) {
        const auto& c = dec.cycles[ci];
        total += c.size();
        for (std::size_t i = 0; i < c.size(); ++i) {
            dec.cycle_of_edge[*g.edge_index(c[i], c[(i + 1) % c.size()])] = ci;
            on_cycles[c[i]].push_back(ci);
            position[c[i]].push_back(i);
        }
    }
    if (total != g.size())
        violation("cycle lengths do not sum to the edge count");

    dec.cycles_at_vertex.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& out = d.out_neighbours(v);
        const auto& in = d.in_neighbours(v);
        std::size_t co = dec.cycle_of_edge[*g.edge_index(v, out[0])];
        std::size_t ci = dec.cycle_of_edge[*g.edge_index(v, in[0])];
        if (co != dec.cycle_of_edge[*g.edge_index(v, out[1])] || ci != dec.cycle_of_edge[*g.edge_index(v, in[1])])
            violation("out-edges or in-edges of vertex " + std::to_string(v) + " lie on different cycles");
        if (co == ci || on_cycles[v].size() != 2)
            violation("vertex " + std::to_string(v) + " is not on exactly two cycles");
        dec.cycles_at_vertex[v] = {co, ci};
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> meets;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [a, b] = dec.cycles_at_vertex[v];
        meets[{std::min(a, b), std::max(a, b)}].push_back(v);
    }
    dec.attachment = meets.begin()->second.size();
    for (const auto& [pair, vertices] : meets)
        if (vertices.size() != dec.attachment)
            violation("intersecting cycles meet in different numbers of vertices");
    if (length % dec.attachment != 0)
        violation("attachment number does not divide 2r");
    dec.ell = length / dec.attachment;
    if (dec.cycles.size() >= 3 && dec.attachment > dec.radius)
        violation("attachment exceeds radius with at least three cycles");

    for (const auto& [pair, vertices] : meets) {
        for (std::size_t ci : {pair.first, pair.second}) {
            std::vector<std::size_t> where;
            for (Vertex v : vertices) {
                std::size_t slot = on_cycles[v][0] == ci ? 0 : 1;
                where.push_back(position[v][slot]);
            }
            if (!equally_spaced(where, length, dec.ell))
                violation("intersection of cycles " + std::to_string(pair.first) + " and " +
                          std::to_string(pair.second) + " is not equally spaced");
        }
        dec.attachment_sets.push_back(vertices);
    }
    std::sort(dec.attachment_sets.begin(), dec.attachment_sets.end());
    return dec;
}

void validate(const AltDecomposition& dec)
{
    if (dec.cycles.empty() || dec.radius == 0 || dec.attachment == 0)
        violation("empty decomposition");
    const std::size_t length = 2 * dec.radius;
    for (const auto& c : dec.cycles)
        if (c.size() != length)
            violation("cycle length differs from 2r");
    if (length % dec.attachment != 0 || dec.ell != length / dec.attachment)
        violation("ell is not 2r/a");
    if (dec.cycles.size() >= 3 && dec.attachment > dec.radius)
        violation("attachment exceeds radius with at least three cycles");
    for (const auto& s : dec.attachment_sets)
        if (s.size() != dec.attachment)
            violation("attachment set of the wrong size");
    for (auto [a, b] : dec.cycles_at_vertex)
        if (a >= dec.cycles.size() || b >= dec.cycles.size() || a == b)
            violation("bad cycle pair at a vertex");
}

AltGraph alt_graph(const Graph& g, const AltDecomposition& dec)
{
    if (dec.cycles.size() < 3)
        throw Error(ErrorKind::TightlyAttached,
                    std::to_string(dec.cycles.size()) + " alternating cycles (a = " + std::to_string(dec.attachment) +
                        ", 2r = " + std::to_string(2 * dec.radius) + ")");
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [a, b] = dec.cycles_at_vertex[v];
        pairs.emplace(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b)));
    }
    std::vector<std::pair<Vertex, Vertex>> edges(pairs.begin(), pairs.end());
    AltGraph out;
    out.graph = Graph::from_edge_list(dec.cycles.size(), edges);
    out.vertex_cycle.resize(dec.cycles.size());
    for (std::size_t i = 0; i < dec.cycles.size(); ++i)
        out.vertex_cycle[i] = i;
    if (!is_regular(out.graph, dec.ell))
        violation("graph of alternating cycles is not " + std::to_string(dec.ell) + "-regular");
    return out;
}

Permutation antipodal_involution(const Graph& g, const AltDecomposition& dec, const PermGroup& group)
{
    if (dec.attachment % 2 != 0)
        throw Error(ErrorKind::OddAttachment, "attachment number " + std::to_string(dec.attachment) + " is odd");
    const std::size_t length = 2 * dec.radius;
    std::vector<std::map<Vertex, std::size_t>> pos(dec.cycles.size());
    for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci)
        for (std::size_t i = 0; i < dec.cycles[ci].size(); ++i)
            pos[ci][dec.cycles[ci][i]] = i;

    std::vector<Vertex> images(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [co, ci] = dec.cycles_at_vertex[v];
        Vertex on_out = dec.cycles[co][(pos[co].at(v) + dec.radius) % length];
        Vertex on_in = dec.cycles[ci][(pos[ci].at(v) + dec.radius) % length];
        if (on_out != on_in)
            throw Error(ErrorKind::AntipodeMismatch, "vertex " + std::to_string(v) + " has antipodes " +
                                                         std::to_string(on_out) + " and " + std::to_string(on_in));
        images[v] = on_out;
    }
    Permutation tau(std::move(images));
    if (!(tau * tau).is_identity())
        violation("antipodal map is not an involution");
    for (Vertex v = 0; v < g.order(); ++v)
        if (tau(v) == v)
            violation("antipodal map fixes vertex " + std::to_string(v));
    if (!is_automorphism(g, tau))
        violation("antipodal map is not an automorphism");
    if (!centralizes(tau, group))
        violation("antipodal map does not centralise the group");
    return tau;
}

DivisibilityRecord divisibility_report(const AltDecomposition& dec, bool is_full_group, bool genuinely_hat)
{
    validate(dec);
    DivisibilityRecord rec;
    rec.radius = dec.radius;
    rec.attachment = dec.attachment;
    rec.a_divides_2r = (2 * dec.radius) % dec.attachment == 0;
    rec.a_divides_r = dec.radius % dec.attachment == 0;
    rec.r_odd = dec.radius % 2 == 1;
    rec.a_mod_4 = dec.attachment % 4;
    rec.odd_radius_applicable = rec.r_odd && is_full_group;
    rec.odd_radius_satisfied = !rec.odd_radius_applicable || rec.a_divides_r;

    if (is_full_group && genuinely_hat && (rec.r_odd || rec.a_mod_4 != 0) && !rec.a_divides_r)
        throw Error(ErrorKind::TheoremViolation, "half-arc-transitive full group with r = " +
                                                     std::to_string(rec.radius) + ", a = " +
                                                     std::to_string(rec.attachment) + " and a not dividing r");
    return rec;
}

AltAction induced_alt_action(const PermGroup& group, const AltDecomposition& dec, const AltGraph& altg,
                             const Graph& g)
{
    const std::size_t k = dec.cycles.size();
    std::vector<Vertex> vertex_of_cycle(k);
    for (std::size_t i = 0; i < altg.vertex_cycle.size(); ++i)
        vertex_of_cycle[altg.vertex_cycle[i]] = static_cast<Vertex>(i);

    std::vector<Permutation> gens;
    for (const Permutation& s : group.generators()) {
        std::vector<Vertex> images(k);
        for (std::size_t ci = 0; ci < k; ++ci) {
            const auto& c = dec.cycles[ci];
            std::optional<std::size_t> target;
            for (std::size_t i = 0; i < c.size(); ++i) {
                auto e = g.edge_index(s(c[i]), s(c[(i + 1) % c.size()]));
                if (!e)
                    throw Error(ErrorKind::NotInvariant, "group element is not an automorphism");
                if (target && dec.cycle_of_edge[*e] != *target)
                    throw Error(ErrorKind::NotInvariant, "cycle " + std::to_string(ci) + " is not mapped to a cycle");
                target = dec.cycle_of_edge[*e];
            }
            images[vertex_of_cycle[ci]] = vertex_of_cycle[*target];
        }
        gens.emplace_back(std::move(images));
    }

    AltAction out;
    out.group = schreier_sims(k, std::move(gens));
    out.transitivity = transitivity_report(out.group, altg.graph);
    out.arc_transitive = out.transitivity.arc_transitive;
    out.ell_odd = dec.ell % 2 == 1;
    out.rad_not_dividing_att = dec.attachment % dec.radius != 0;
    if (!out.transitivity.vertex_transitive || !out.transitivity.edge_transitive)
        violation("induced action on alternating cycles is not vertex- and edge-transitive");
    if (out.arc_transitive != out.ell_odd)
        violation("induced action arc-transitivity disagrees with the parity of 2r/a");
    return out;
}

PermGroup cycle_restriction(const PermGroup& group, const AltDecomposition& dec, std::size_t index,
                            std::size_t element_limit)
{
    const auto& cycle = dec.cycles.at(index);
    const std::size_t n = group.degree();
    std::vector<long> position(n, -1);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        position[cycle[i]] = static_cast<long>(i);

    std::vector<Vertex> id(n);
    std::iota(id.begin(), id.end(), Vertex{0});
    std::set<std::vector<Vertex>> seen{id};
    std::vector<std::vector<Vertex>> frontier{id};
    std::set<std::vector<Vertex>> restricted;
    while (!frontier.empty()) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& x : frontier) {
            std::vector<Vertex> r(cycle.size());
            bool stabilises = true;
            for (std::size_t i = 0; i < cycle.size() && stabilises; ++i) {
                long p = position[x[cycle[i]]];
                stabilises = p >= 0;
                r[i] = static_cast<Vertex>(p);
            }
            if (stabilises)
                restricted.insert(std::move(r));
            for (const Permutation& s : group.generators()) {
                std::vector<Vertex> y(n);
                for (std::size_t i = 0; i < n; ++i)
                    y[i] = s(x[i]);
                if (seen.insert(y).second)
                    next.push_back(std::move(y));
            }
        }
        if (seen.size() > element_limit)
            throw Error(ErrorKind::TooLarge, "group has more than " + std::to_string(element_limit) + " elements");
        frontier = std::move(next);
    }
    std::vector<Permutation> gens;
    for (const auto& r : restricted)
        gens.emplace_back(r);
    return schreier_sims(cycle.size(), std::move(gens));
}

bool is_dihedral_on_cycle(const PermGroup& restriction)
{
    const std::size_t len = restriction.degree();
    if (restriction.order() != len)
        return false;
    for (const Permutation& s : restriction.generators())
        for (Vertex i = 0; i < len; ++i) {
            Vertex a = s(i), b = s(static_cast<Vertex>((i + 1) % len));
            if ((a + 1) % len != b && (b + 1) % len != a)
                return false;
        }
    return true;
}

} // namespace hat
