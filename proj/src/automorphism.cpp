#include "hatkit/automorphism.hpp"

#include <algorithm>
#include <map>

#include "hatkit/error.hpp"

namespace hat {

namespace {

// Individualisation-refinement search. Leaves are compared by the adjacency
// matrix of the relabelled graph; the largest certificate is canonical.
// Pruning: children equivalent under found automorphisms that fix the current
// prefix pointwise are skipped, and a leaf equivalent to the first or best leaf
// backjumps to the node where the two paths diverge.
class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    void run()
    {
        std::vector<Vertex> prefix;
        dfs(refine(g_, ColoredPartition::unit(n_)), prefix);
    }

    std::vector<Permutation> automorphisms;

    // Entry i is the vertex placed at canonical position i.
    const std::vector<Vertex>& best_labeling() const { return best_->lab; }

private:
    struct Leaf {
        std::vector<Vertex> path;
        std::vector<Vertex> lab;
        std::vector<std::uint64_t> cert;
    };

    std::vector<std::uint64_t> certificate(const std::vector<Vertex>& lab) const
    {
        std::vector<Vertex> pos(n_);
        for (std::size_t i = 0; i < n_; ++i)
            pos[lab[i]] = static_cast<Vertex>(i);
        std::vector<std::uint64_t> bits((n_ * n_ + 63) / 64, 0);
        for (const Edge& e : g_.edges()) {
            std::size_t a = pos[e.u], b = pos[e.v];
            std::size_t k1 = a * n_ + b, k2 = b * n_ + a;
            // Bit order puts low row/column indices in the most significant
            // position so lexicographic comparison follows matrix order.
            bits[k1 / 64] |= std::uint64_t{1} << (63 - k1 % 64);
            bits[k2 / 64] |= std::uint64_t{1} << (63 - k2 % 64);
        }
        return bits;
    }

    static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
    {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k])
            ++k;
        return k;
    }

    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to)
    {
        std::vector<Vertex> images(n_);
        for (std::size_t i = 0; i < n_; ++i)
            images[from[i]] = to[i];
        Permutation p(std::move(images));
        if (!is_automorphism(g_, p))
            throw Error(ErrorKind::StructureViolation, "search produced a non-automorphism");
        if (!p.is_identity())
            automorphisms.push_back(std::move(p));
    }

    // Returns the depth of the node where exploration resumes.
    std::size_t on_leaf(const ColoredPartition& p, const std::vector<Vertex>& prefix)
    {
        const std::size_t depth = prefix.size();
        Leaf leaf;
        leaf.path = prefix;
        leaf.lab.reserve(n_);
        for (const auto& cell : p.cells)
            leaf.lab.push_back(cell.front());
        leaf.cert = certificate(leaf.lab);

        if (!first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            return depth == 0 ? 0 : depth - 1;
        }
        if (leaf.cert == first_->cert) {
            record_automorphism(first_->lab, leaf.lab);
            return common_prefix(first_->path, leaf.path);
        }
        if (leaf.cert == best_->cert) {
            record_automorphism(best_->lab, leaf.lab);
            return common_prefix(best_->path, leaf.path);
        }
        if (leaf.cert > best_->cert)
            best_ = std::move(leaf);
        return depth == 0 ? 0 : depth - 1;
    }

    bool pruned(Vertex v, const std::vector<Vertex>& tried, const std::vector<Vertex>& prefix) const
    {
        if (tried.empty())
            return false;
        std::vector<Permutation> stabiliser;
        for (const Permutation& a : automorphisms)
            if (std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return a(x) == x; }))
                stabiliser.push_back(a);
        if (stabiliser.empty())
            return false;
        auto cells = orbits_of(n_, stabiliser);
        for (const auto& cell : cells) {
            if (!std::binary_search(cell.begin(), cell.end(), v))
                continue;
            return std::any_of(tried.begin(), tried.end(),
                               [&](Vertex u) { return std::binary_search(cell.begin(), cell.end(), u); });
        }
        return false;
    }

    std::size_t dfs(const ColoredPartition& p, std::vector<Vertex>& prefix)
    {
        if (p.is_discrete())
            return on_leaf(p, prefix);
        const std::size_t depth = prefix.size();

        const std::vector<Vertex>* target = nullptr;
        for (const auto& cell : p.cells)
            if (cell.size() > 1 && (!target || cell.size() < target->size()))
                target = &cell;

        std::vector<Vertex> tried;
        for (Vertex v : *target) {
            if (pruned(v, tried, prefix))
                continue;
            prefix.push_back(v);
            std::size_t resume = dfs(refine(g_, individualize(p, v)), prefix);
            prefix.pop_back();
            tried.push_back(v);
            if (resume < depth)
                return resume;
        }
        return depth == 0 ? 0 : depth - 1;
    }

    const Graph& g_;
    std::size_t n_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
};

} // namespace

SymmetryData analyze_symmetry(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > max_search_order)
        throw Error(ErrorKind::TooLarge, "search limited to " + std::to_string(max_search_order) + " vertices");

    std::vector<Permutation> gens;
    std::vector<Vertex> lab;
    if (n > 0) {
        Search search(g);
        search.run();
        gens = std::move(search.automorphisms);
        lab = search.best_labeling();
    }

    std::vector<Vertex> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[lab[i]] = static_cast<Vertex>(i);

    SymmetryData out;
    out.automorphisms = schreier_sims(n, std::move(gens));
    out.canonical.labeling = Permutation(labels);
    out.canonical.graph = relabel(g, labels);
    out.canonical.certificate = write_graph6(out.canonical.graph);
    return out;
}

PermGroup automorphism_group(const Graph& g) { return analyze_symmetry(g).automorphisms; }

CanonicalForm canonical_form(const Graph& g) { return analyze_symmetry(g).canonical; }

std::optional<Permutation> is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    auto degrees = [](const Graph& x) {
        std::vector<std::size_t> d;
        for (Vertex v = 0; v < x.order(); ++v)
            d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h))
        return std::nullopt;

    auto cg = canonical_form(g);
    auto ch = canonical_form(h);
    if (cg.certificate != ch.certificate)
        return std::nullopt;
    auto to_h = inverse(ch.labeling);
    Permutation iso = cg.labeling * to_h;
    for (const Edge& e : g.edges())
        if (!h.adjacent(iso(e.u), iso(e.v)))
            throw Error(ErrorKind::StructureViolation, "canonical labelling produced a non-isomorphism");
    return iso;
}

void require_automorphisms(const PermGroup& group, const Graph& g)
{
    if (group.degree() != g.order())
        throw Error(ErrorKind::NotAutomorphisms, "group degree " + std::to_string(group.degree()) +
                                                     " differs from graph order " + std::to_string(g.order()));
    for (const Permutation& s : group.generators())
        if (!is_automorphism(g, s))
            throw Error(ErrorKind::NotAutomorphisms, "generator " + to_cycle_string(s) + " breaks adjacency");
}

namespace {

// Arcs indexed by (tail, position of head in tail's sorted adjacency list).
struct ArcIndex {
    explicit ArcIndex(const Graph& g) : g(g), offset(g.order() + 1, 0)
    {
        for (Vertex v = 0; v < g.order(); ++v)
            offset[v + 1] = offset[v] + g.degree(v);
    }

    std::size_t count() const { return offset.back(); }

    std::size_t position(Vertex v, Vertex w) const
    {
        auto nb = g.neighbours(v);
        return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    }

    std::size_t index(Vertex tail, Vertex head) const { return offset[tail] + position(tail, head); }

    Arc arc(std::size_t k) const
    {
        auto it = std::upper_bound(offset.begin(), offset.end(), k);
        Vertex tail = static_cast<Vertex>(it - offset.begin() - 1);
        return Arc{tail, g.neighbours(tail)[k - offset[tail]]};
    }

    const Graph& g;
    std::vector<std::size_t> offset;
};

std::size_t two_arc_count(const Graph& g)
{
    std::size_t c = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        c += g.degree(v) * (g.degree(v) > 0 ? g.degree(v) - 1 : 0);
    return c;
}

} // namespace

TransitivityReport transitivity_report(const PermGroup& group, const Graph& g)
{
    require_automorphisms(group, g);
    const auto& gens = group.generators();
    ArcIndex arcs(g);

    std::vector<Permutation> on_edges, on_arcs, on_two_arcs;
    std::vector<std::size_t> two_offset(g.order() + 1, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t d = g.degree(v);
        two_offset[v + 1] = two_offset[v] + d * (d > 0 ? d - 1 : 0);
    }
    // 2-arc u-v-w is indexed by (v, i, j) with i != j the positions of u, w.
    auto two_index = [&](Vertex v, std::size_t i, std::size_t j) {
        std::size_t d = g.degree(v);
        return two_offset[v] + i * (d - 1) + (j < i ? j : j - 1);
    };

    for (const Permutation& s : gens) {
        std::vector<Vertex> e_img(g.size()), a_img(arcs.count()), t_img(two_arc_count(g));
        for (std::size_t k = 0; k < g.size(); ++k) {
            const Edge& e = g.edges()[k];
            e_img[k] = static_cast<Vertex>(*g.edge_index(s(e.u), s(e.v)));
        }
        for (std::size_t k = 0; k < arcs.count(); ++k) {
            Arc a = arcs.arc(k);
            a_img[k] = static_cast<Vertex>(arcs.index(s(a.tail), s(a.head)));
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            auto nb = g.neighbours(v);
            Vertex sv = s(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = 0; j < nb.size(); ++j)
                    if (i != j)
                        t_img[two_index(v, i, j)] = static_cast<Vertex>(
                            two_index(sv, arcs.position(sv, s(nb[i])), arcs.position(sv, s(nb[j]))));
        }
        on_edges.emplace_back(std::move(e_img));
        on_arcs.emplace_back(std::move(a_img));
        on_two_arcs.emplace_back(std::move(t_img));
    }

    TransitivityReport r;
    r.vertex_orbit_count = orbits_of(g.order(), gens).size();
    r.edge_orbit_count = orbits_of(g.size(), on_edges).size();
    r.arc_orbit_count = orbits_of(arcs.count(), on_arcs).size();
    r.two_arc_orbit_count = orbits_of(two_arc_count(g), on_two_arcs).size();

    r.vertex_transitive = r.vertex_orbit_count <= 1;
    r.edge_transitive = r.edge_orbit_count <= 1;
    r.arc_transitive = r.edge_transitive && r.arc_orbit_count <= 1;
    r.two_arc_transitive = r.arc_transitive && r.two_arc_orbit_count <= 1;
    r.half_arc_transitive = r.vertex_transitive && r.edge_transitive && !r.arc_transitive;

    // A vertex- and edge-transitive group on a graph of odd valence is arc-transitive.
    if (g.order() > 0 && is_regular(g, 3) && r.vertex_transitive && r.edge_transitive && !r.arc_transitive)
        throw Error(ErrorKind::StructureViolation, "cubic graph with a half-arc-transitive action");
    return r;
}

std::vector<std::vector<Arc>> arc_orbits(const PermGroup& group, const Graph& g)
{
    require_automorphisms(group, g);
    ArcIndex arcs(g);
    std::vector<Permutation> on_arcs;
    for (const Permutation& s : group.generators()) {
        std::vector<Vertex> img(arcs.count());
        for (std::size_t k = 0; k < arcs.count(); ++k) {
            Arc a = arcs.arc(k);
            img[k] = static_cast<Vertex>(arcs.index(s(a.tail), s(a.head)));
        }
        on_arcs.emplace_back(std::move(img));
    }
    std::vector<std::vector<Arc>> out;
    for (const auto& cell : orbits_of(arcs.count(), on_arcs)) {
        std::vector<Arc> orbit;
        for (Vertex k : cell)
            orbit.push_back(arcs.arc(k));
        out.push_back(std::move(orbit));
    }

    auto vertex_orbits = orbits_of(g.order(), group.generators()).size();
    if (out.size() == 2 && vertex_orbits == 1) {
        std::vector<Arc> reversed;
        for (const Arc& a : out[0])
            reversed.push_back(Arc{a.head, a.tail});
        std::sort(reversed.begin(), reversed.end());
        if (reversed != out[1])
            throw Error(ErrorKind::StructureViolation, "two arc orbits that are not mutually reversed");
    }
    return out;
}

} // namespace hat
