#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hatkit/graph.hpp"
#include "hatkit/perm.hpp"

namespace hat {

inline constexpr std::size_t max_search_order = 10000;

/// Ordered partition of the vertex set; cell order is significant.
struct ColoredPartition {
    std::vector<std::vector<Vertex>> cells;

    static ColoredPartition unit(std::size_t n);
    bool is_discrete() const noexcept;
    std::size_t cell_count() const noexcept { return cells.size(); }

    friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
};

/// Coarsest equitable refinement (1-dimensional Weisfeiler-Leman). Fragments of
/// a split cell are ordered by ascending neighbour count, so the result is
/// invariant under relabelling.
ColoredPartition refine(const Graph& g, const ColoredPartition& p);

/// Moves v into a singleton cell placed just before the rest of its cell.
ColoredPartition individualize(const ColoredPartition& p, Vertex v);

struct CanonicalForm {
    Graph graph;
    /// graph6 encoding of the canonically relabelled graph.
    std::string certificate;
    /// labeling(v) is the canonical label of input vertex v.
    Permutation labeling;
};

/// Both outputs of one individualisation-refinement search.
struct SymmetryData {
    PermGroup automorphisms;
    CanonicalForm canonical;
};

/// Throws TooLarge beyond max_search_order vertices.
SymmetryData analyze_symmetry(const Graph& g);

PermGroup automorphism_group(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// A verified isomorphism mapping vertex v of g to vertex iso(v) of h.
std::optional<Permutation> is_isomorphic(const Graph& g, const Graph& h);

struct TransitivityReport {
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    bool two_arc_transitive = false;
    bool half_arc_transitive = false;
    std::size_t vertex_orbit_count = 0;
    std::size_t edge_orbit_count = 0;
    std::size_t arc_orbit_count = 0;
    std::size_t two_arc_orbit_count = 0;
};

/// Orbit counts of G on vertices, edges, arcs and 2-arcs of g. Throws
/// NotAutomorphisms when some generator of G is not an automorphism of g.
TransitivityReport transitivity_report(const PermGroup& group, const Graph& g);

/// Orbits of G on the 2|E| arcs, each sorted, ordered by smallest arc.
std::vector<std::vector<Arc>> arc_orbits(const PermGroup& group, const Graph& g);

/// Throws NotAutomorphisms unless every generator preserves adjacency.
void require_automorphisms(const PermGroup& group, const Graph& g);

} // namespace hat
